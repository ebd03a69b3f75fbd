# bracketed sums and products
constants: a [ ] + *
predicates: L
L a
-> L x1 L [ x1 ]
-> L x1 -> L x2 L x1 + x2
-> L x1 -> L x2 L x1 * x2
