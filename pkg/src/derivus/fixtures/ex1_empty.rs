# the empty-list symbol is neutral for concatenation
constants: □
predicates:
~ □ x1 , x1
~ x1 □ , x1
