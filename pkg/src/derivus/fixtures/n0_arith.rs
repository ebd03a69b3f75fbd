# numerals relative to N0 with the Peano equations as R-axioms
constants: 0 s + *
predicates: N0
N0 0
-> N0 x1 N0 s ( x1 )
-> N0 x1 ~ + ( 0 x1 ) , x1
-> N0 x1 -> N0 x2 ~ + ( s ( x1 ) x2 ) , s ( + ( x1 x2 ) )
-> N0 x1 ~ * ( 0 x1 ) , 0
-> N0 x1 -> N0 x2 ~ * ( s ( x1 ) x2 ) , + ( * ( x1 x2 ) x2 )
-> N0 x1 -> N0 x2 -> ~ s ( x1 ) , s ( x2 ) ~ x1 , x2
