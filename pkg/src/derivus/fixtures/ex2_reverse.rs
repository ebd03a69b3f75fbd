# strings over a, b and the reversal operation f
constants: a b f
predicates: W
W a
W b
-> W x1 -> W x2 W x1 x2
~ f ( a ) , a
~ f ( b ) , b
-> W x1 -> W x2 ~ f ( x1 x2 ) , f ( x2 ) f ( x1 )
