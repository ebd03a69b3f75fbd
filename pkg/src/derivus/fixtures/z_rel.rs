# a reflexive, symmetric, transitive relation R and its field E; every argument is a single variable
constants: a b f
predicates: R E
R x1 , x1
-> R x1 , x2 R x2 , x1
-> R x1 , x2 -> R x2 , x3 R x1 , x3
-> R x1 , x2 E x1
