# unary positive integers with order, sum and product
constants: a
predicates: N < + *
N a
-> N x1 N x1 a
-> N x1 -> N x2 < x1 , x1 x2
-> N x1 -> N x2 + x1 , x2 , x1 x2
-> N x2 * a , x2 , x2
-> * x1 , x2 , x3 * x1 a , x2 , x3 x2
