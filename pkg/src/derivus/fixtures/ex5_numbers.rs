# numerals, lists of numerals, sums and products over lists
constants: 0 1 □ s + *
predicates: N0 NL
N0 0
-> N0 x1 N0 s ( x1 )
~ 1 , s ( 0 )
NL □
-> N0 x1 NL x1
-> NL x1 -> NL x2 NL x1 x2
-> NL x1 ~ x1 □ , x1
-> NL x1 ~ □ x1 , x1
~ + ( □ ) , 0
-> NL x1 ~ + ( 0 x1 ) , + ( x1 )
-> N0 x1 -> NL x2 ~ + ( s ( x1 ) x2 ) , s ( + ( x1 x2 ) )
~ * ( □ ) , 1
-> NL x1 ~ * ( 0 x1 ) , 0
-> N0 x1 -> NL x2 ~ * ( s ( x1 ) x2 ) , + ( * ( x1 x2 ) * ( x2 ) )
