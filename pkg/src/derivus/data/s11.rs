# The universal recursive system over the 11-symbol coding alphabet.
# Variables: x1=x x2=y x3=u x4=w x5=z x6=r x7=t x8=s.  The trailing comment is the axiom label.
constants: a v p □ ' * ~_ (_ )_ ,_ ->_
predicates: Acc N0 < <= As Ps V L EL LL Eq PRF ELL EPRF RF VV SbL SbLL SbPRF SbRF AP EqA RBasis+ RBasis BRA RA PBRA Ds+ Ds Omega
Acc '  # 1a
-> Acc x1 Acc x1 '  # 1b
N0 □  # 2a
-> Acc x1 N0 x1  # 2b
-> Acc x1 -> Acc x2 < x1 , x1 x2  # 3
-> Acc x1 <= x1 , x1  # 4a
-> < x1 , x2 <= x1 , x2  # 4b
-> <= x1 , x3 As a x1 , x3  # 5
-> <= x1 , x4 Ps p x1 , x4  # 6
-> Acc x1 V v x1  # 7
-> As x1 , x3 L x1 , x3  # 8a
-> V x1 -> N0 x3 L x1 , x3  # 8b
-> As x1 , x3 -> L x2 , x3 L x1 (_ x2 )_ , x3  # 8c
-> L x1 , x3 -> L x2 , x3 L x1 x2 , x3  # 8d
-> As x1 , x3 EL x1 , x3  # 9a
-> As x1 , x3 -> EL x2 , x3 EL x1 (_ x2 )_ , x3  # 9b
-> EL x1 , x3 -> EL x2 , x3 EL x1 x2 , x3  # 9c
-> L x1 , x3 LL x1 , x3  # 10a
-> LL x1 , x3 -> L x2 , x3 LL x1 ,_ x2 , x3  # 10b
-> N0 x4 -> L x1 , x3 -> L x2 , x3 Eq ~_ x1 ,_ x2 , x3 , x4  # 11
-> Eq x1 , x3 , x4 PRF x1 , x3 , x4  # 12a
-> Ps x1 , x4 -> N0 x3 PRF x1 , x3 , x4  # 12b
-> Ps x1 , x4 -> LL x2 , x3 PRF x1 x2 , x3 , x4  # 12c
-> EL x1 , x3 ELL x1 , x3  # 13a
-> ELL x1 , x3 -> EL x2 , x3 ELL x1 ,_ x2 , x3  # 13b
-> N0 x4 -> EL x1 , x3 -> EL x2 , x3 EPRF ~_ x1 ,_ x2 , x3 , x4  # 14a
-> Ps x1 , x4 -> N0 x3 EPRF x1 , x3 , x4  # 14b
-> Ps x1 , x4 -> ELL x2 , x3 EPRF x1 x2 , x3 , x4  # 14c
-> PRF x1 , x3 , x4 RF x1 , x3 , x4  # 15a
-> PRF x1 , x3 , x4 -> RF x2 , x3 , x4 RF ->_ x1 x2 , x3 , x4  # 15b
-> < x1 , x2 VV v x1 , v x2  # 16a
-> < x1 , x2 VV v x2 , v x1  # 16b
-> As x1 , x3 -> V x5 -> L x6 , x3 SbL x1 , x6 , x5 , x1 , x3  # 17a
-> V x1 -> L x6 , x3 SbL x1 , x6 , x1 , x6 , x3  # 17b
-> VV x1 , x5 -> L x6 , x3 SbL x1 , x6 , x5 , x1 , x3  # 17c
-> As x1 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbL x1 (_ x2 )_ , x6 , x5 , x1 (_ x7 )_ , x3  # 17d
-> SbL x1 , x6 , x5 , x8 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbL x1 x2 , x6 , x5 , x8 x7 , x3  # 17e
-> SbL x1 , x6 , x5 , x8 , x3 SbLL x1 , x6 , x5 , x8 , x3  # 18a
-> SbLL x1 , x6 , x5 , x8 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbLL x1 ,_ x2 , x6 , x5 , x8 ,_ x7 , x3  # 18b
-> N0 x4 -> SbL x1 , x6 , x5 , x8 , x3 -> SbL x2 , x6 , x5 , x7 , x3 SbPRF ~_ x1 ,_ x2 , x6 , x5 , ~_ x8 ,_ x7 , x3 , x4  # 19a
-> Ps x1 , x4 -> V x5 -> L x6 , x3 SbPRF x1 , x6 , x5 , x1 , x3 , x4  # 19b
-> Ps x1 , x4 -> SbLL x2 , x6 , x5 , x7 , x3 SbPRF x1 x2 , x6 , x5 , x1 x7 , x3 , x4  # 19c
-> SbPRF x1 , x6 , x5 , x8 , x3 , x4 SbRF x1 , x6 , x5 , x8 , x3 , x4  # 20a
-> SbPRF x1 , x6 , x5 , x8 , x3 , x4 -> SbRF x2 , x6 , x5 , x7 , x3 , x4 SbRF ->_ x1 x2 , x6 , x5 , ->_ x8 x7 , x3 , x4  # 20b
-> RF x1 , x3 , x4 SbRF x1 , x1 , x3 , x4  # 21a
-> SbRF x1 x5 , x8 , x5 , x6 x8 , x3 , x4 SbRF x1 x5 , x6 x8 , x3 , x4  # 21b
-> SbRF x1 x5 x2 , x8 , x5 , x6 x8 x7 , x3 , x4 SbRF x1 x5 x2 , x6 x8 x7 , x3 , x4  # 21c
-> V x1 -> V x2 AP ->_ ~_ x1 ,_ x2 , x1 , x2  # 22a
-> V x1 -> V x2 -> AP x6 , x8 , x7 AP ->_ ~_ x1 ,_ x2 x6 , x1 ,_ x8 , x2 ,_ x7  # 22b
-> N0 x3 -> N0 x4 -> V x1 EqA ~_ x1 ,_ x1 , x3 , x4  # 23a
-> V x1 -> V x2 -> Eq x5 , x3 , x4 -> SbPRF x5 , x1 , x2 , x8 , x3 , x4 EqA ->_ x8 ->_ ~_ x1 ,_ x2 x5 , x3 , x4  # 23b
-> AP x6 , x8 , x7 -> Ps x5 , x4 -> N0 x3 EqA x6 ->_ x5 x8 x5 x7 , x3 , x4  # 23c
-> RF x1 , x3 , x4 RBasis+ x3 * x4 * x1 *  # 24a
-> RF x1 , x3 , x4 -> RBasis+ x3 * x4 * x8 * RBasis+ x3 * x4 * x8 * x1 *  # 24b
-> N0 x3 -> N0 x4 RBasis x3 * x4 * □ *  # 25a
-> RBasis+ x1 RBasis x1  # 25b
-> RF x1 , x3 , x4 BRA x3 * x4 * x1 * , x1  # 26a
-> RF x1 , x3 , x4 -> RBasis+ x3 * x4 * x8 * BRA x3 * x4 * x8 * x1 * , x1  # 26b
-> RF x1 , x3 , x4 -> BRA x3 * x4 * x8 * , x2 BRA x3 * x4 * x8 * x1 * , x2  # 26c
-> EqA x1 , x3 , x4 -> RBasis x3 * x4 * x8 * RA x3 * x4 * x8 * , x1  # 27a
-> BRA x1 , x2 RA x1 , x2  # 27b
-> PRF x1 , x3 , x4 -> BRA x3 * x4 * x8 * , x1 PBRA x3 * x4 * x8 * , x1  # 28
-> N0 x3 -> N0 x4 -> RA x3 * x4 * x8 * , x1 Ds+ x3 * x4 * x1 * , x3 * x4 * x8 *  # 29a
-> Ds+ x1 , x2 -> RA x2 , x5 Ds+ x1 x5 * , x2  # 29b
-> Ds+ x1 ->_ x6 x8 x5 , x7 -> BRA x1 ->_ x6 x8 x5 , ->_ x6 x8 -> PBRA x1 ->_ x6 x8 x5 , x6 -> RBasis+ x1 ->_ x6 x8 x5 x8 * Ds+ x1 ->_ x6 x8 x5 x8 * , x7  # 29c
-> Ds+ x3 * x4 x1 x2 x5 , x7 -> BRA x3 * x4 x1 x2 x5 , x2 -> SbRF x2 , x8 , x3 , x4 Ds+ x3 * x4 x1 x2 x5 x8 * , x7  # 29d
-> N0 x3 -> N0 x4 -> RBasis x3 * x4 * x8 * Ds x3 * x4 * □ * , x3 * x4 * x8 *  # 30a
-> Ds+ x1 , x2 Ds x1 , x2  # 30b
-> EPRF x1 , x3 , x4 -> BRA x7 , x1 -> Ds x7 , x2 Omega x2 x1  # 31
