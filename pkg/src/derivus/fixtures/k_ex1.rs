# B: strings of strokes after 0; C and D both characterise concatenations of B-strings
constants: 0 '
predicates: B C D
B 0
-> B x1 B x1 '
-> B x1 C x1
-> B x1 -> C x2 C x1 x2
-> B x1 D x1
-> B x1 -> C x2 D x1 x2
