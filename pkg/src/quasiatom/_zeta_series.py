"""Maclaurin coefficients of the Klein-Nishina factor about zero.

Generated by tools/derive_zeta_series.py; do not edit by hand.
"""

GAMMA_SWITCH = 0.2

COEFFS = (
    1.0,  # 1/1
    -2.0,  # -2/1
    5.2,  # 26/5
    -13.3,  # -133/10
    32.68571428571428,  # 1144/35
    -77.71428571428571,  # -544/7
    180.1904761904762,  # 3784/21
    -409.8666666666667,  # -6148/15
    918.4969696969697,  # 151552/165
    -2034.0363636363636,  # -111872/55
    4461.202797202797,  # 637952/143
    -9706.901098901099,  # -883328/91
    20979.621978021976,  # 9545728/455
    -45085.25714285715,  # -1577984/35
    96412.61176470589,  # 8195072/85
    -205291.92156862744,  # -10469888/51
    435486.3818369453,  # 421986304/969
    -920723.3122807017,  # -262406144/285
    1940851.1037593985,  # 1290665984/665
    -4080339.4493506495,  # -1570930688/385
    8557647.214003388,  # 15155593216/1771
    -17908683.38339921,  # -4530896896/253
    37403161.822608694,  # 21506818048/575
    -77976144.34461538,  # -25342246912/325
    162288734.8731624,  # 474694549504/2925
    -337244575.1013431,  # -276203307008/819
    699812849.9879584,  # 1278558076928/1827
    -1450253956.66601,  # -1472007766016/1015
    3001729472.327475,  # 13492773978112/4495
    -6205838078.348387,  # -961904902144/155
    12816317022.592375,  # 4370364104704/341
    -26441699875.593582,  # -4944597876736/187
    54501133511.79343,  # 356709918834688/6545
    -112236999713.8465,  # -200343044489216/1785
    230942105070.73566,  # 897210078199808/3885
    -474817900623.62823,  # -1001390952415232/2109
    975498500511.6953,  # 8915080796176384/9139
    -2002713689621.1433,  # -2473351406682112/1235
    4108844525613.3403,  # 10950070660759552/2665
    -8424493050359.794,  # -12089147527266304/1435
    17262537472762.877,  # 213036974951366656/12341
    -35352071687752.836,  # -117050709358149632/3311
    72357938152876.5,  # 513379571194658816/7095
    -148023092873870.6,  # -561747637456338944/3795
    302659917863680.3,  # 4907630568159576064/16215
    -618545980779532.4,  # -668648205222674432/1081
    1263541766281538.8,  # 2909936687746383872/2303
    -2579978454101778.5,  # -3160473606274678784/1225
    5265737899244866.0,  # 109658991751774339072/20825
    -1.0743021047770036e+16,  # -59355191288929452032/5525
    2.1909100932046316e+16,  # 256621299217058496512/11713
    -4.466425956643647e+16,  # -276963073571472539648/6201
    9.102052083942576e+16,  # 2387923364222334926848/26235
    -1.854248293332055e+17,  # -642497033639557070848/3465
    3.77616824176213e+17,  # 2762267068848997924864/7315
    -7.687672003535448e+17,  # -2965135091763622445056/3857
    1.5646000225761587e+18,  # 50863582133928343896064/32509
    -3.183328466756335e+18,  # -27233375033100446203904/8555
    6.474908398878848e+18,  # 116515976637824865665024/17995
    -1.3166309472729952e+19,  # -124487456064661700476928/9455
    2.676558472286876e+19,  # 1062888134929841385373696/39711
    -5.439706362082576e+19,  # -35412488417157570363392/651
    1.1052584415439131e+20,  # 150867777270744136810496/1365
    -2.2451498551641394e+20,  # -160528214644235964514304/715
)
