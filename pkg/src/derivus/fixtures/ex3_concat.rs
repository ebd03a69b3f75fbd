# one predicate symbol used at two arities
constants: a b
predicates: W C
W a
W b
-> W x1 -> W x2 W x1 x2
-> W x1 -> W x2 C x1 , x2 , x1 x2
-> W x1 -> W x2 -> W x3 C x1 , x2 , x3 , x1 x2 x3
