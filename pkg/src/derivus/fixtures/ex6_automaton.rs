# four-state automaton accepting strings with an even number of 0s and of 1s
constants: 0 1
predicates: A B C D
B 1
D 0
-> A x1 D x1 0
-> A x1 B x1 1
-> B x1 C x1 0
-> B x1 A x1 1
-> C x1 B x1 0
-> C x1 D x1 1
-> D x1 A x1 0
-> D x1 C x1 1
