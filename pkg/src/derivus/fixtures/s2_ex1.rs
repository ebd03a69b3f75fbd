# two predicates p, q over a, b
constants: a b
predicates: p q
p a , a b
-> p x1 , x2 p x1 a , x2 a b
-> p x1 , x2 q x2
