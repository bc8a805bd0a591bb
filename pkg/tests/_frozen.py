"""Frozen reference values.

Generated by tools/gen_reference.py with mpmath; do not edit
by hand.  Row layouts are documented next to each table.
"""

# rows: (a, y, E_a(-y))
ML_ONE = [
    (0.1, 1e-06, 0.999998948864083),
    (0.1, 0.01, 0.9895964392973549),
    (0.1, 0.5, 0.654324460288002),
    (0.1, 1.2, 0.4400807689106189),
    (0.1, 2.5, 0.27335667076010756),
    (0.1, 8.0, 0.10490780732759583),
    (0.1, 40.0, 0.022869412718031258),
    (0.1, 300.0, 0.0031097471084250822),
    (0.1, 21544346900318.867, 4.3435000617214485e-14),
    (0.3, 1e-06, 0.9999988857586106),
    (0.3, 0.01, 0.9889684616572032),
    (0.3, 0.5, 0.6326490059435991),
    (0.3, 1.2, 0.4101085918257019),
    (0.3, 2.5, 0.24498312379478696),
    (0.3, 8.0, 0.08949309581862072),
    (0.3, 40.0, 0.018979521266478696),
    (0.3, 300.0, 0.0025629387026455553),
    (0.3, 21544346900318.867, 3.575801983838011e-14),
    (0.45, 1e-06, 0.9999988709013383),
    (0.45, 0.01, 0.9888121531077743),
    (0.45, 0.5, 0.6194111161093687),
    (0.45, 1.2, 0.38658068571342197),
    (0.45, 2.5, 0.2199894858195166),
    (0.45, 8.0, 0.0752582095241518),
    (0.45, 40.0, 0.015399532729895167),
    (0.45, 300.0, 0.0020613703935249642),
    (0.45, 774263682.6811278, 7.991648227296242e-10),
    (0.5, 1e-06, 0.9999988716218329),
    (0.5, 0.01, 0.9888154610463425),
    (0.5, 0.5, 0.6156903441929259),
    (0.5, 1.2, 0.37853741692923976),
    (0.5, 2.5, 0.2108063640611436),
    (0.5, 8.0, 0.06998516620088092),
    (0.5, 40.0, 0.014100335983377814),
    (0.5, 300.0, 0.0018806214973780646),
    (0.5, 100000000.0, 5.641895835477562e-09),
    (0.55, 1e-06, 0.9999988749749577),
    (0.55, 0.01, 0.9888446287202208),
    (0.55, 0.5, 0.6123666496108976),
    (0.55, 1.2, 0.37040841723005435),
    (0.55, 2.5, 0.20113183662671566),
    (0.55, 8.0, 0.06443825552672405),
    (0.55, 40.0, 0.0127567921141974),
    (0.55, 300.0, 0.0016946798258249138),
    (0.55, 18738174.22860383, 2.7115495054236768e-08),
    (0.7, 1e-06, 0.9999988994533995),
    (0.7, 0.01, 0.9890745773501166),
    (0.7, 0.5, 0.6051475920595643),
    (0.7, 1.2, 0.34575789081981145),
    (0.7, 2.5, 0.16863128667619576),
    (0.7, 8.0, 0.046069992385362385),
    (0.7, 40.0, 0.008526170230910745),
    (0.7, 300.0, 0.0011172307483615785),
    (0.7, 517947.46792312124, 6.453806454430634e-07),
    (0.9, 1e-06, 0.9999989602464622),
    (0.9, 0.01, 0.9896618680353658),
    (0.9, 0.5, 0.603405498695861),
    (0.9, 1.2, 0.31439249318454715),
    (0.9, 2.5, 0.11469986754557784),
    (0.9, 8.0, 0.017095144580796806),
    (0.9, 40.0, 0.0027434496977920995),
    (0.9, 300.0, 0.00035233009645537264),
    (0.9, 27825.59402207126, 3.777815618885583e-06),
    (0.95, 1e-06, 0.999998979468099),
    (0.95, 0.01, 0.9898491994067782),
    (0.95, 0.5, 0.6046140273421318),
    (0.95, 1.2, 0.30746962888782975),
    (0.95, 2.5, 0.09888643122316557),
    (0.95, 8.0, 0.008931091521831823),
    (0.95, 40.0, 0.0013474824487701776),
    (0.95, 300.0, 0.00017226342092791207),
    (0.95, 16237.76739188721, 3.1634072006634084e-06),
]

# rows: (a, b, c, y, E^c_{a,b}(-y))
ML_GEN = [
    (0.5, 2.0, 1.0, 0.3, 0.8123676077367658),
    (0.5, 2.0, 1.0, 5.0, 0.19010401892842527),
    (0.5, 2.0, 1.0, 200.0, 0.005616966358293994),
    (0.45, 0.8, 1.0, 0.3, 0.6065366460728754),
    (0.45, 0.8, 1.0, 5.0, 0.0801677659223763),
    (0.45, 0.8, 1.0, 200.0, 0.001966056037857155),
    (0.85, 1.6, 1.0, 0.5, 0.8080957884647505),
    (0.85, 1.6, 1.0, 8.0, 0.10324242081688782),
    (0.85, 1.6, 1.0, 150.0, 0.005444470185443904),
    (0.7, 1.3, 2.2, 0.5, 0.4245698552860283),
    (0.7, 1.3, 2.2, 80.0, -1.2756470085942674e-05),
    (0.7, 1.3, 2.2, 2000.0, -1.0818850907029323e-08),
    (0.85, 1.7, 0.6, 0.5, 0.9175255966563376),
    (0.85, 1.7, 0.6, 100.0, 0.06837127912757433),
    (0.5, 1.0, 2.0, 0.4, 0.43408820975088014),
    (0.5, 1.0, 2.0, 200.0, 7.051840916193568e-08),
    (0.5, 1.0, 2.0, 5000.0, 4.513516126760131e-12),
]

# rows: (ap, tau, w_re, w_im, val_re, val_im) for 2R1(1,ap,1,tau;w)
R21_REAL = [
    (-1.6, 0.5, -0.5, 0.0, -1.3107986414723345, 0.0),
    (-1.6, 0.5, -0.95, 0.0, -1.6536561937652705, -2.901167034394765e-25),
    (-1.6, 0.5, -3.0, 0.0, 89.76557968350765, -1.083117270006083e-23),
    (-1.6, 0.5, -6.5, 0.0, 1243.4692096122376, -6.271249408721875e-23),
    (-1.6, 0.5, -20.0, 0.0, 46943.314063040016, -7.52976652703159e-22),
    (-1.6, 0.5, -300.0, 0.0, 273399634.840356, -2.9162951749629e-19),
    (-1.6, 0.5, -10000.0, 0.0, 20418208249715.25, -6.533826705247148e-16),
    (-0.75, 0.5, -0.5, 0.0, 0.2597463294873425, 0.0),
    (-0.75, 0.5, -3.0, 0.0, -6.883696796557446, 3.729061992406974e-25),
    (-0.75, 0.5, -20.0, 0.0, -126.27675690928494, 9.491625482790214e-25),
    (-0.75, 0.5, -10000.0, 0.0, -1414213.551812259, 2.121320348817178e-23),
    (-0.3, 0.45, -0.6, 0.0, 1.8743861683120906, 0.0),
    (-0.3, 0.45, -2.5, 0.0, 3.992305900191069, 0.0),
    (-0.3, 0.45, -15.0, 0.0, 12.664812756183261, 0.0),
    (-0.3, 0.45, -2000.0, 0.0, 329.5350495233478, 0.0),
    (-1.37, 0.45, -0.6, 0.0, 6.9503396371786845, 0.0),
    (-1.37, 0.45, -2.5, 0.0, 249.8517555957621, 0.0),
    (-1.37, 0.45, -15.0, 0.0, 55832.08696758928, 0.0),
    (-1.37, 0.45, -2000.0, 0.0, 164346781253.47922, 0.0),
    (0.25, 0.45, -0.6, 0.0, 0.8239865863037439, 0.0),
    (0.25, 0.45, -2.5, 0.0, 0.5874396900510568, 0.0),
    (0.25, 0.45, -15.0, 0.0, 0.28884124824036844, 0.0),
    (-0.55, 0.85, -0.5, 0.0, 1.4075294122104853, 0.0),
    (-0.55, 0.85, -4.0, 0.0, 3.4523032650407055, 0.0),
    (-0.55, 0.85, -50.0, 0.0, 16.395030333368638, 0.0),
    (-1.22, 0.3, -0.7, 0.0, 0.600457167655759, 0.0),
    (-1.22, 0.3, -5.0, 0.0, -7099.174466601061, 0.0),
    (-1.22, 0.3, -100.0, 0.0, -1389189655.5309076, 0.0),
    (0.4, 0.7, -0.8, 0.0, 0.7552364375006252, 0.0),
    (0.4, 0.7, -6.0, 0.0, 0.3849528958063222, 0.0),
    (0.4, 0.7, -90.0, 0.0, 0.09918569820321224, 0.0),
    (1.4, 0.5, -0.85, 0.0, 0.4785429268570907, 0.0),
    (1.4, 0.5, -2.5, 0.0, 0.23017157962809698, 7.391882577590473e-27),
    (1.4, 0.5, -30.0, 0.0, 0.02253952803744383, 7.454873560312599e-29),
    (1.4, 0.5, 0.6, 0.0, 3.1678835348265695, 0.0),
    (2.5, 0.5, -0.85, 0.0, 0.37992910951237546, 0.0),
    (2.5, 0.5, -30.0, 0.0, 0.014139319106382399, 4.707954834747605e-29),
    (2.5, 0.5, -4000.0, 0.0, 0.00010610329207887367, 2.652582136185903e-33),
    (3.7, 0.5, -0.95, 0.0, 0.29518209998565703, 2.4061064198425935e-26),
    (3.7, 0.5, -12.0, 0.0, 0.027282618434306145, 2.266481234082178e-28),
    (1.7, 0.45, -0.85, 0.0, 0.45364043584712826, 0.0),
    (2.4, 0.3, -0.7, 0.0, 0.4980367863092646, 0.0),
    (2.0, 0.85, -0.8, 0.0, 0.345679012345679, 0.0),
    (2.0, 0.85, 0.6, 0.0, 5.687499999999999, 0.0),
]

# rows: (ap, tau, w_re, w_im, val_re, val_im)
R21_COMPLEX = [
    (-0.35, 0.6, -1.3715425817235405, -0.3399091098934566, 2.121716869218096, 0.22914425464643132),
    (-1.3, 0.6, -1.3715425817235405, -0.3399091098934566, -2.6915288395007773, -2.6406993354684736),
    (0.6, 0.6, -1.3715425817235405, -0.3399091098934566, 0.5379215223770832, -0.05521660225515053),
    (-0.35, 0.6, -0.8432380813400007, -0.5799160962085683, 1.767976215200053, 0.4363975146513886),
    (-1.3, 0.6, -0.8432380813400007, -0.5799160962085683, 1.1533521367289796, -2.288560317079378),
    (0.6, 0.6, -0.8432380813400007, -0.5799160962085683, 0.6165722230680462, -0.13580657502338792),
    (-0.35, 0.6, -0.42347915228619365, -0.44036114885872174, 1.4241748071258649, 0.3752897395499192),
    (-1.3, 0.6, -0.42347915228619365, -0.44036114885872174, 1.6942291359095873, -0.5012448999609583),
    (0.6, 0.6, -0.42347915228619365, -0.44036114885872174, 0.741849153939617, -0.15874656515175511),
    (-0.35, 0.6, -0.16618881451379924, -0.21268839706532483, 1.1729158812948945, 0.20129397334535606),
    (-1.3, 0.6, -0.16618881451379924, -0.21268839706532483, 1.29543235601151, 0.09691779043355594),
    (0.6, 0.6, -0.16618881451379924, -0.21268839706532483, 0.8823216659591562, -0.11125847221964508),
    (-0.35, 0.5, -0.920442065259926, -0.21728689675164017, 2.4310754391717913, 0.30058361218381574),
    (-1.3, 0.5, -0.920442065259926, -0.21728689675164017, 1.1507241527571577, -0.5722808128685847),
    (0.6, 0.5, -0.920442065259926, -0.21728689675164017, 0.6142929985516792, -0.051927393783617805),
    (-0.35, 0.5, -0.5688644810057831, -0.3515775842541429, 1.9416607764405558, 0.5222824079979222),
    (-1.3, 0.5, -0.5688644810057831, -0.3515775842541429, 1.8585447041006442, -0.11799663029029915),
    (0.6, 0.5, -0.5688644810057831, -0.3515775842541429, 0.6981637267322143, -0.11501082597416362),
    (-0.35, 0.5, -0.23388534490216442, -0.2116633280967549, 1.4090408029851296, 0.3450046307722525),
    (-1.3, 0.5, -0.23388534490216442, -0.2116633280967549, 1.4598070100344016, 0.2573531251684619),
    (0.6, 0.5, -0.23388534490216442, -0.2116633280967549, 0.8435848633495985, -0.10516778916535795),
    (-0.35, 0.45, -2.0774903209716804, -1.7743443573792104, 5.9042129870672975, 3.426404826253733),
    (-1.3, 0.45, -2.0774903209716804, -1.7743443573792104, 48.33251399375217, -83.09163069067203),
    (0.6, 0.45, -2.0774903209716804, -1.7743443573792104, 0.34762539348093746, -0.15420238872077666),
    (-0.35, 0.45, -1.1132994973467265, -0.9508475978200251, 3.792674889618327, 2.0452386627465367),
    (-1.3, 0.45, -1.1132994973467265, -0.9508475978200251, 10.459708283506812, -12.603986199086995),
    (0.6, 0.45, -1.1132994973467265, -0.9508475978200251, 0.5028139203302393, -0.17154551858875594),
    (-0.35, 0.45, -0.596602428555608, -0.5095466111299425, 2.555211869834472, 1.1934413703268778),
    (-1.3, 0.45, -0.596602428555608, -0.5095466111299425, 3.5082510123809487, -1.4017633847268156),
    (0.6, 0.45, -0.596602428555608, -0.5095466111299425, 0.6616579429149967, -0.15872247181506885),
    (-0.35, 0.5, -0.8451542547285166, -0.8451542547285166, 2.4137822108548375, 1.1671141104228255),
    (-1.3, 0.5, -0.8451542547285166, -0.8451542547285166, 3.616366034808739, -1.401303371202755),
    (0.6, 0.5, -0.8451542547285166, -0.8451542547285166, 0.5657958141460033, -0.1889951576375132),
    (-0.35, 0.5, -0.31622776601683794, -0.31622776601683794, 1.5533544346001362, 0.5015511205027294),
    (-1.3, 0.5, -0.31622776601683794, -0.31622776601683794, 1.6740435504850428, 0.2903481977005116),
    (0.6, 0.5, -0.31622776601683794, -0.31622776601683794, 0.7913384837101332, -0.13820337834501392),
]

# rows: (a, b, c, tau, w_re, w_im, val_re, val_im)
R21_ABC = [
    (0.7, 1.4, 2.2, 0.6, -0.6, 0.0, 0.7771284249591418, 0.0),
    (1.3, 0.8, 1.1, 0.45, 0.4, 0.0, 1.731098385597506, 0.0),
    (2.0, 2.6, 0.9, 0.85, -0.8, 0.0, -0.018885937300988313, 0.0),
]

# rows: (z_re, z_im, s, a, val_re, val_im)
LERCH = [
    (0.5, 0.0, 2.3, 0.7, 2.4531346732664763, 0.0),
    (-0.8, 0.0, 1.1, 1.4, 0.4901774794034462, 0.0),
    (0.95, 0.0, 3.0, 0.25, 64.61573763966814, 0.0),
    (-6.0, 0.0, 2.0, 0.8, 0.920361004776208, 0.0),
    (4.0, 3.0, 1.5, 1.1, 0.18337956236092381, 0.5643797976279795),
    (-40.0, 0.0, 1.2, 2.5, 0.014326747145150106, 0.0),
    (0.98, 0.0, 1.5, 1.0, 2.1816084334041324, 0.0),
    (-0.99, 0.0, 0.8, 0.35, 1.825491380291139, 0.0),
    (0.5, 0.0, 2.0, -1.3, 6.712673820503134, 0.0),
    (-3.5, 0.0, 1.0, -0.6, -7.157094950001542, 0.0),
    (-0.4858248037419929, -0.3804011669438329, 1.0, -0.6666666666666667, -2.8717412441736467, -0.9360822508541586),
    (-1.431484145988247, -0.6374586746700649, 1.0, -0.3333333333333333, -4.516122231450888, -0.4731627888073764),
    (-0.17717027707234828, -0.22558202951227488, 1.0, -0.6666666666666667, -2.0385981142965726, -0.6215517879511443),
]

# rows: (x, y, z, ell(x, y, z))
ELL = [
    (0.8, 0.45, 2.0, 39.98578556763556),
    (-0.2, 0.45, 2.0, 4.474619506140717),
    (-0.4, 0.5, 1.0, 7.1781150685398),
    (1.3, 0.6, 1.5, -21.607078502403915),
    (0.35, 0.7, 2.0, -7.122218880691042),
    (-1.65, 0.35, 0.8, -8.391895179837064),
    (0.3, 0.5, 1.0, -7.36127878668214),
    (-0.4, 1.0, 1.5, 1.886063352270321),
]

# rows: (x, alpha, lam, theta, q(x))
TEMPERING = [
    (0.1, 0.5, 1.0, 1.0, 0.654720846018577),
    (1.0, 0.5, 1.0, 1.0, 0.15729920705028513),
    (10.0, 0.5, 1.0, 1.0, 7.744216431044084e-06),
    (0.5, 0.7, 2.0, 0.0, 0.33838531062055965),
    (25.0, 0.7, 2.0, 0.0, 0.018312812353111732),
    (2.0, 1.0, 1.3, 0.7, 0.01831563888873418),
    (0.03, 0.35, 0.8, 0.6, 0.7728071827875196),
    (5.0, 0.95, 1.0, 0.0, 0.02539907066325376),
]

# rows: (gamma, alpha, lam, theta, t0, t1); None = divergent
TRUNC_MOMENTS = [
    (0.0, 0.5, 1.0, 1.0, 0.3710958548148452, 0.12890414518515478),
    (0.5, 0.5, 1.0, 1.0, 1.0278700837754882, 0.10050908332002444),
    (1.6, 0.5, 1.0, 1.0, None, 0.0647508265173701),
    (0.45, 0.7, 2.0, 0.0, 0.9354807136571784, 1.1860226108606906),
    (1.2, 0.35, 0.8, 0.6, None, 0.18580809355838449),
    (0.8, 0.3, 1.5, 0.0, 3.232151812632293, 4.694050153623235),
    (0.0, 1.0, 1.3, 0.7, 0.43233235838169365, 0.06766764161830635),
    (1.9, 0.95, 1.0, 0.0, None, 0.17076109738226156),
    (1.0, 0.5, 1.0, 1.0, None, 0.08097869420005595),
]

# rows: (gamma, alpha, lam, theta, n, int x^{n-1-gamma} q dx)
POWER_MOMENTS = [
    (0.5, 0.5, 1.0, 1.0, 2, 0.37612638903183754),
    (0.5, 0.5, 1.0, 1.0, 3, 0.45135166683820505),
    (0.5, 0.5, 1.0, 1.0, 4, 0.9671821432247251),
    (1.6, 0.5, 1.0, 1.0, 2, 1.5072729560396956),
    (1.6, 0.5, 1.0, 1.0, 4, 0.42957279247131314),
    (1.6, 0.5, 1.0, 0.0, 2, 7.178115068539793),
    (0.9, 0.8, 1.5, 2.5, 3, 0.05693258475755877),
    (0.5, 1.0, 2.0, 1.0, 2, 0.17055445132441474),
    (0.0, 0.45, 1.2, 0.8, 1, 0.5372288740981942),
    (0.0, 0.45, 1.2, 0.8, 2, 0.49922153936667446),
]
