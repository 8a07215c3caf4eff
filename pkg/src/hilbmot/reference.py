"""Published reference values, frozen as plain data.

Polynomials in L are stored as ``{exponent: coefficient}`` maps.  Series in t
are lists of such maps, one per power of t.  The r_d entries are
``(denominator, numerator coefficients from the top degree down)`` in the
variable n, so r_d(n) = sum(c * n**k) / denominator.

Only d <= 8 of the r_d data is ever checked end to end.  The rest was
transcribed for completeness and is exposed read-only; it came from external
partition counts that this package does not reproduce.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType

from .grassmann import proj
from .lpoly import ONE, L, LPoly

HILB_PUNCTUAL = {
    (6, 3): {10: 1, 9: 3, 8: 7, 7: 9, 6: 9, 5: 7, 4: 5, 3: 3, 2: 2, 1: 1, 0: 1},
    (7, 3): {12: 1, 11: 3, 10: 8, 9: 14, 8: 16, 7: 14, 6: 11, 5: 7, 4: 5, 3: 3, 2: 2, 1: 1, 0: 1},
    (8, 3): {14: 1, 13: 4, 12: 12, 11: 22, 10: 28, 9: 27, 8: 21, 7: 15, 6: 11, 5: 7, 4: 5, 3: 3, 2: 2, 1: 1, 0: 1},
    (4, 4): {9: 1, 8: 2, 7: 3, 6: 5, 5: 4, 4: 4, 3: 3, 2: 2, 1: 1, 0: 1},
    (5, 4): {12: 1, 11: 2, 10: 4, 9: 7, 8: 9, 7: 9, 6: 9, 5: 6, 4: 5, 3: 3, 2: 2, 1: 1, 0: 1},
    (6, 4): {15: 1, 14: 3, 13: 7, 12: 13, 11: 17, 10: 20, 9: 20, 8: 17, 7: 13, 6: 10, 5: 7, 4: 5, 3: 3, 2: 2, 1: 1, 0: 1},
    (7, 4): {18: 1, 17: 3, 16: 9, 15: 19, 14: 30, 13: 38, 12: 44, 11: 39, 10: 34, 9: 26, 8: 20, 7: 14, 6: 11, 5: 7, 4: 5, 3: 3, 2: 2, 1: 1, 0: 1},
    (8, 4): {21: 2, 20: 5, 19: 15, 18: 34, 17: 55, 16: 76, 15: 88, 14: 87, 13: 77, 12: 64, 11: 49, 10: 38, 9: 28, 8: 21, 7: 15, 6: 11, 5: 7, 4: 5, 3: 3, 2: 2, 1: 1, 0: 1},
}

OMEGA_3 = {
    1: {0: 1},
    2: {2: 1, 1: 1},
    3: {4: 1, 3: 1, 2: 1},
    4: {6: 1, 5: 2, 4: 1, 3: 1, 2: -1},
    5: {8: 1, 7: 2, 6: 2, 5: 1, 3: -1},
    6: {10: 1, 9: 3, 8: 4, 7: 3, 6: -1, 5: -2, 4: -2},
    7: {12: 1, 11: 3, 10: 5, 9: 5, 7: -4, 6: -3, 5: -1, 4: 1},
    8: {14: 1, 13: 4, 12: 8, 11: 10, 10: 2, 9: -7, 8: -10, 7: -3, 6: 1, 5: 2},
}

HILB_P3 = {
    5: {15: 1, 14: 2, 13: 7, 12: 17, 11: 39, 10: 67, 9: 97, 8: 114, 7: 111, 6: 90, 5: 59, 4: 33, 3: 14, 2: 6, 1: 2, 0: 1},
    6: {18: 1, 17: 2, 16: 7, 15: 18, 14: 45, 13: 92, 12: 167, 11: 242, 10: 306, 9: 316, 8: 282, 7: 206, 6: 131, 5: 68, 4: 32, 3: 14, 2: 6, 1: 2, 0: 1},
    7: {21: 1, 20: 2, 19: 7, 18: 18, 17: 47, 16: 105, 15: 220, 14: 385, 13: 587, 12: 761, 11: 843, 10: 799, 9: 647, 8: 449, 7: 266, 6: 142, 5: 66, 4: 32, 3: 14, 2: 6, 1: 2, 0: 1},
    8: {24: 1, 23: 2, 22: 7, 21: 18, 20: 48, 19: 111, 18: 251, 17: 498, 16: 891, 15: 1368, 14: 1847, 13: 2132, 12: 2150, 11: 1853, 10: 1395, 9: 904, 8: 522, 7: 272, 6: 136, 5: 66, 4: 32, 3: 14, 2: 6, 1: 2, 0: 1},
}

QUOT_P3 = {
    2: {10: 1, 9: 3, 8: 9, 7: 14, 6: 20, 5: 19, 4: 17, 3: 10, 2: 6, 1: 2, 0: 1},
    3: {15: 1, 14: 3, 13: 12, 12: 30, 11: 58, 10: 88, 9: 111, 8: 114, 7: 99, 6: 75, 5: 47, 4: 27, 3: 14, 2: 6, 1: 2, 0: 1},
    4: {20: 1, 19: 3, 18: 13, 17: 39, 16: 102, 15: 202, 14: 346, 13: 480, 12: 581, 11: 590, 10: 533, 9: 415, 8: 297, 7: 187, 6: 113, 5: 60, 4: 32, 3: 14, 2: 6, 1: 2, 0: 1},
}

P_POLYS = {
    1: [
        {0: 1},
    ],
    2: [
        {0: 1},
    ],
    3: [
        {0: 1},
    ],
    4: [
        {0: 1},
        {2: 1},
        {2: -1},
    ],
    5: [
        {0: 1},
        {3: 1, 2: 1},
        {5: 1, 3: -1, 2: -1},
        {5: -1},
    ],
    6: [
        {0: 1},
        {4: 2, 3: 2, 2: 1},
        {8: 1, 7: 2, 6: 1, 5: -1, 4: -3, 3: -2, 2: -1},
        {8: -2, 7: -2, 6: -1, 5: 1, 4: 1},
        {8: 1},
    ],
    7: [
        {0: 1},
        {5: 2, 4: 3, 3: 2, 2: 1},
        {10: 1, 9: 5, 8: 5, 7: 3, 6: -1, 5: -4, 4: -4, 3: -2, 2: -1},
        {16: 1, 15: 1, 14: 2, 13: 2, 12: 3, 11: -2, 10: -6, 9: -10, 8: -7, 7: -3, 6: 1, 5: 2, 4: 1},
        {17: -1, 16: -2, 15: -3, 14: -3, 13: -4, 12: -1, 11: 3, 10: 6, 9: 5, 8: 2},
        {17: 1, 16: 1, 15: 2, 14: 1, 13: 2, 12: -2, 11: -1, 10: -1},
    ],
    8: [
        {0: 1},
        {6: 3, 5: 4, 4: 4, 3: 2, 2: 1},
        {12: 3, 11: 9, 10: 12, 9: 10, 8: 3, 7: -3, 6: -7, 5: -7, 4: -5, 3: -2, 2: -1},
        {21: 1, 20: 1, 19: 3, 18: 5, 17: 7, 16: 9, 15: 10, 14: 3, 13: -7, 12: -19, 11: -25, 10: -22, 9: -12, 8: -2, 7: 4, 6: 4, 5: 3, 4: 1},
        {26: 1, 25: 1, 24: 2, 23: 1, 22: 1, 21: -2, 20: -5, 19: -11, 18: -15, 17: -20, 16: -18, 15: -11, 14: 4, 13: 15, 12: 21, 11: 17, 10: 10, 9: 2, 8: -1, 7: -1},
        {27: -1, 26: -2, 25: -3, 24: -3, 23: -3, 22: -1, 21: 2, 20: 8, 19: 12, 18: 15, 17: 13, 16: 8, 15: -1, 14: -7, 13: -8, 12: -5, 11: -1},
        {27: 1, 26: 1, 25: 2, 24: 1, 23: 2, 21: -1, 20: -4, 19: -4, 18: -5, 16: 1, 15: 2},
    ],
}

Q_POLYS = {
    1: [
        {0: 1},
    ],
    2: [
        {1: 1},
    ],
    3: [
        {2: 1},
    ],
    4: [
        {3: 1},
        {5: 1, 2: -1},
    ],
    5: [
        {4: 1},
        {7: 1, 6: 1, 4: -1, 3: -1},
        {9: 1, 8: 1, 6: -1, 5: -1},
    ],
    6: [
        {5: 1},
        {9: 2, 8: 3, 7: 2, 6: -2, 5: -3, 4: -2},
        {12: 1, 11: 3, 10: 2, 9: -2, 8: -6, 7: -3, 5: 3, 4: 1},
        {14: 1, 13: 2, 11: -1, 10: -2, 8: 1},
    ],
    7: [
        {6: 1},
        {11: 2, 10: 4, 9: 4, 8: -1, 7: -5, 6: -4, 5: -1, 4: 1},
        {16: 1, 15: 4, 14: 9, 13: 10, 12: 4, 11: -10, 10: -17, 9: -13, 8: -1, 7: 5, 6: 5, 5: 1},
        {18: 2, 17: 4, 16: 4, 15: -2, 14: -11, 13: -14, 12: -6, 11: 5, 10: 10, 9: 6, 8: 1},
        {20: 1, 19: 2, 18: 1, 16: -2, 15: 1, 14: 2, 13: 2, 12: -2, 11: -1, 10: -1},
    ],
    8: [
        {7: 1},
        {13: 3, 12: 7, 11: 9, 10: 1, 9: -8, 8: -11, 7: -4, 6: 1, 5: 2},
        {21: 1, 20: 1, 19: 3, 18: 9, 17: 20, 16: 27, 15: 19, 14: -12, 13: -39, 12: -51, 11: -28, 10: 1, 9: 22, 8: 19, 7: 8, 6: -1, 5: -1},
        {26: 1, 25: 1, 24: 2, 23: 2, 22: 6, 21: 14, 20: 19, 19: 12, 18: -20, 17: -52, 16: -64, 15: -37, 14: 9, 13: 43, 12: 44, 11: 21, 9: -9, 8: -4, 7: -1},
        {27: -1, 26: -2, 24: 4, 23: 8, 22: 4, 21: -7, 20: -16, 19: -9, 18: 10, 17: 23, 16: 22, 15: 3, 14: -9, 13: -12, 12: -3, 10: 1},
        {27: 2, 26: 3, 25: 4, 24: 1, 23: -1, 22: -1, 21: 1, 19: -6, 18: -6, 17: -1, 16: 1, 15: 2},
    ],
}

R_POLYS = {
    6: (1, [1]),
    7: (1, [1, -2]),
    8: (15, [8, -15, -38]),
    9: (5, [1, -1, -26, 51]),
    10: (1680, [99, -170, -4223, 1766, 24200]),
    11: (5040, [73, -597, -1043, -42051, 235834, -281928]),
    12: (75600, [233, -6387, 23405, -430245, 1452722, 2747472, -10278720]),
    13: (151200, [88, -6245, 31097, -236165, -1469593, 21899170, -64976192, 53149440]),
    14: (19958400, [1981, -311988, 1935414, -3845172, -193010871, 1493337048, -359131804, -17294094288, 31388071680]),
    15: (6652800, [103, -32632, 318242, -599228, -16650853, -46403708, 2470215868, -13748769232, 26565820320, -14059278720]),
    16: (1816214400, [4050, -2415235, 44202720, -198998202, 543569502, -33951478911, 406407860400, -886475686148, -5844164792832, 29344150425216, -36495822424320]),
    17: (9081072000, [2713, -2905932, 102936245, -696362890, 3912831339, -60103579116, 105375461075, 7975305525090, -72894798639452, 241427250677248, -287098838112720, 13072622068800]),
    18: (871782912000, [32647, -60701262, 4011851771, -35040317130, 168916525761, -467520183306, -30485333857327, 537458552700810, -2257598433391508, -7856165277517032, 88701471042013056, -249606482614519680, 236887198095744000]),
    19: (871782912000, [3847, -12105581, 1419885673, -16448633149, 77399715691, 148861849677, -12298839695941, 69445773950033, 1726606727061122, -24456018469726196, 120768098399825768, -234712358509584384, 20565176385939840, 334664360427801600]),
    20: (133382785536000, [65459, -341997999, 67993482881, -1137851310231, 6863878273427, -11397386114337, -94916460499517, -9137497186611453, 219397451904763774, -1394004307912199964, -2536756760556061064, 68645406748809408384, -323391855641276684160, 649398353859605376000, -483528616380614246400]),
    21: (29640619008000, [1532, -13095959, 4247443551, -109750132475, 885524398299, -4126838161517, 35011946515013, -1008817082259145, 8866308376448781, 127237613967358136, -2741156531918400024, 18625194630887394320, -51388145341071878512, 3220254428031661440, 261708337903419912960, -378213429350798899200]),
    22: (101370917007360000, [524097, -7247511368, 3717237160520, -152184186299660, 1570134610133714, -9035640753821276, 50458962657912320, -402805530960448180, -13424282139388183019, 439767764755867019156, -3802421532685450383200, -2095537058812293622960, 234480780397771174644208, -1620421765907622698032512, 5090557538890888381359360, -7614777869397455680051200, 4157088781168635992064000]),
    23: (709596419051520000, [349455, -7748519514, 6128700383656, -396196709710600, 5160723726554410, -33056117183302108, 106247070348532972, 1038864681729035240, -56225386232920907185, 680070895686740877958, 6320546409234867610388, -209510306821027467249680, 1856164786465966273736720, -6687218730778391669954336, -626845029527650429502016, 81776578356238362723671040, -241130010521642210056166400, 230953469310039778735104000]),
    24: (23416681828700160000, [1048460, -37016385183, 44238216645036, -4438506626037516, 74937699997317060, -562591452104653566, 1958819321299862252, 8888255431431499608, -243421963109949028680, -6031308305222396144619, 267803044865827855728888, -2966075995664738789286468, 1622425560699019170248840, 227322542130051193367587968, -2127700548933581500558150176, 9169544904833319462449093376, -20256824429334656867442055680, 19649874106231223185607270400, -3240290359379905083850752000]),
    25: (4683336365740032000, [18235, -1019399825, 1810365879804, -275863055020407, 6287711297318214, -57901707711619446, 289219084251460720, -1009283386616377538, 19676156331158908191, -899803001299779118113, 13526465786506229882988, 81138404334872119471977, -4340287998236452397458904, 48200906266152323175663784, -214116222702857039223114912, -96255084553962509937965232, 5251379089177169319784011264, -23362801119060581617375852800, 45371842164302310664455168000, -34189093301675630118532300800]),
    26: (25852016738884976640000, [8388331, -739204394610, 1924250747704469, -435800072551872714, 13867745325067836750, -157526730215754733908, 1001864136149464848298, -5103149030391359492868, 52400005207020194241479, -825597681149570318033226, -12605867718739135261848543, 783086200071350660814554478, -10676618251495171555430595632, 16369272655785444492325116816, 1011212771005471932089807675216, -12110261856446073932069935204896, 66250904426343966025992362067072, -187864832852428838553998453187072, 217829258262474632939407900354560, 111832291754129290393687615488000, -368278371840755647668884078592000]),
}

M_POLYS = {
    0: [1],
    1: [6, -34, 58, -20, -7, 3],
    2: [-144, 1356, -5770, 13965, -19993, 15064, -5170, 545, -206, 244, -79, 8],
}


def lp(terms: dict) -> LPoly:
    return LPoly(terms)


def hilb_ref(d: int, n: int) -> LPoly:
    return lp(HILB_PUNCTUAL[(d, n)])


def p_ref(d: int) -> tuple[LPoly, ...]:
    return tuple(lp(c) for c in P_POLYS[d])


def q_ref(d: int) -> tuple[LPoly, ...]:
    return tuple(lp(c) for c in Q_POLYS[d])


def r_eval(d: int, n) -> Fraction:
    den, coeffs = R_POLYS[d]
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * n + c
    return acc / den


_P2 = proj(2)
_U = 1 - L

# keyed by (d, n)
EPS_MOT_TABLE = MappingProxyType({
    (4, 3): _U * _P2 * L**2,
    (4, 4): _U * _P2 * (L + 1) * (L**2 + 1) * L**2,
    (5, 3): _U * _P2 * (L + 1) * L**3,
    (5, 4): _U * _P2 * (L**2 + L + 1) * (L + 1) * (L**2 + 1) * L**3,
    (6, 3): _U * _P2 * (2 * L**2 + 3 * L + 2) * L**4,
    (6, 4): ONE
    + _U * _P2 * ((2 * L**6 + 5 * L**5 + 6 * L**4 + 5 * L**3 + 3 * L**2 + L - 1) * (L**2 + 1) * L**3 - 1),
})

# keyed by (d, k): length first, then embedding dimension
E_MOT_TABLE = MappingProxyType({
    (4, 3): _U * _P2 * L**2,
    (5, 3): _U * _P2 * (L**2 + L + 1) * L**2,
    (5, 4): _U * _P2 * (L + 1) * (L**2 + 1) * L**2,
    (6, 3): _U * _P2 * (2 * L**2 + L + 1) * (L**2 + L + 1) * L**2,
    (6, 4): ONE - _U * _P2 * (L**9 - L**8 - 3 * L**7 - 5 * L**6 - 6 * L**5 - 5 * L**4 - 2 * L**3 - L**2 + 1),
    (6, 5): -_U * proj(4) * (L**5 - L**4 - L**3 - 3 * L**2 - 2 * L - 1) * L**2,
})

# rank-3 Omega classes on a 3-fold
OMEGA_33 = MappingProxyType({
    1: _P2,
    2: _P2 * (L + 1) * L**3,
    3: _P2 * (L**4 + L**3 + 2 * L**2 - 1) * L**4,
    4: (L**6 + 2 * L**5 + 3 * L**4 + 3 * L**3 - 2 * L**2 - 2 * L - 1) * L**6,
})

# U_4(x, y) as {(i, j): coefficient of x^i y^j}
U4_TERMS = MappingProxyType({
    (4, 3): L**10,
    (3, 3): -(L**9),
    (3, 0): L**6,
    (1, 2): L**3,
    (3, 2): -(L**6 + L**5),
    (2, 3): L**9 - L**6,
    (3, 1): -(L**8 + L**7 + L**6 - L**5),
    (2, 2): -(L**9 + L**8 + L**7 - L**6 - 2 * L**5 - L**4),
    (2, 1): L**8 + 2 * L**7 + 2 * L**6 + L**3 + L**2,
    (2, 0): -(L**6 + L**2),
    (1, 1): -(2 * L**3 + 2 * L**2 + L),
    (1, 0): -(L**4 - L**2),
    (0, 0): ONE,
})

# Euler specialisation of the Quot series: numerator {(i, j): c} over (1-x)^a (1-y)^b
CHI_QUOT = MappingProxyType({
    1: ({(0, 0): 1}, 1, 2),
    2: ({(0, 0): 1, (1, 1): -1}, 2, 3),
    3: ({(0, 0): 1, (1, 1): -2, (2, 2): 1}, 3, 4),
    4: (
        {(3, 3): -1, (2, 2): 2, (1, 2): 1, (2, 1): 2, (1, 1): -5, (2, 0): -1, (1, 0): 1, (0, 0): 1},
        4,
        5,
    ),
})


def _c(a, b):
    from math import comb

    return comb(a, b) if 0 <= b <= a else 0


# Euler characteristics of the Quot strata, keyed by (d, s); d=4, s=2 sums both rows
CHI_QUOT_STRATA = MappingProxyType({
    (3, 1): lambda n, r: _c(n + 1, 2) * r,
    (3, 2): lambda n, r: 2 * n * _c(r, 2),
    (3, 3): lambda n, r: _c(r, 3),
    (4, 1): lambda n, r: (n + 3 * _c(n, 2) + _c(n, 3)) * r,
    (4, 2): lambda n, r: 2 * n * _c(r, 2) + _c(2 * n, 2) * _c(r, 2),
    (4, 3): lambda n, r: 3 * n * _c(r, 3),
    (4, 4): lambda n, r: _c(r, 4),
})
