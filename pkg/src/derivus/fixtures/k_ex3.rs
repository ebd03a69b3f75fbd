# N: nonempty strings over a; < x,xy for such strings
constants: a
predicates: N <
N a
-> N x1 N x1 a
-> N x1 -> N x2 < x1 , x1 x2
