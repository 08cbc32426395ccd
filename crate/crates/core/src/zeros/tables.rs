//! Precomputed constants for the zero finder.

// Riemann–Siegel correction coefficients C_0..C_4 as power series in (p − 1/2).
pub(crate) const C0: [f64; 47] = [
    0.3826834323650898,
    0.0,
    1.7489618723100817,
    0.0,
    2.118025207685496,
    0.0,
    -0.8707216670511481,
    0.0,
    -3.4733112243465167,
    0.0,
    -1.6626947308999325,
    0.0,
    1.216731288919232,
    0.0,
    1.3014304161007977,
    0.0,
    0.03051102182736167,
    0.0,
    -0.3755803051545095,
    0.0,
    -0.1085784416564066,
    0.0,
    0.051832902999549624,
    0.0,
    0.029999480619902277,
    0.0,
    -0.0022759396706125644,
    0.0,
    -0.004382647416580339,
    0.0,
    -0.0004064230183729847,
    0.0,
    0.0004006097785422114,
    0.0,
    8.971057991388841e-05,
    0.0,
    -2.3025650027239108e-05,
    0.0,
    -9.380006601906792e-06,
    0.0,
    6.323514947609108e-07,
    0.0,
    6.551022819231502e-07,
    0.0,
    2.210523745552697e-08,
    0.0,
    -3.322316176445629e-08,
];
pub(crate) const C1: [f64; 48] = [
    0.0,
    -0.053650205256750697,
    0.0,
    0.11027818741081483,
    0.0,
    1.2317200154315227,
    0.0,
    1.2634964862799458,
    0.0,
    -1.695108997559503,
    0.0,
    -2.9998711967650102,
    0.0,
    -0.10819944959899208,
    0.0,
    1.9407662946212714,
    0.0,
    0.7838423561500687,
    0.0,
    -0.5054829667900366,
    0.0,
    -0.38450723496057976,
    0.0,
    0.03747264646531532,
    0.0,
    0.09092026610973176,
    0.0,
    0.01044923755006451,
    0.0,
    -0.012582979651583417,
    0.0,
    -0.003399503721151274,
    0.0,
    0.0010410950537714891,
    0.0,
    0.0005010949051118486,
    0.0,
    -3.956359669003182e-05,
    0.0,
    -4.7624592453571896e-05,
    0.0,
    -1.8539355338085133e-06,
    0.0,
    3.1936918080068973e-06,
    0.0,
    4.0907807608506065e-07,
    0.0,
    -1.5446624332576631e-07,
];
pub(crate) const C2: [f64; 51] = [
    0.005188542830293168,
    0.0,
    0.0012378633552253898,
    0.0,
    -0.18137505725166997,
    0.0,
    0.14291492748532125,
    0.0,
    1.3303391766687565,
    0.0,
    0.3522472353403734,
    0.0,
    -2.421001595891951,
    0.0,
    -1.6760787022538108,
    0.0,
    1.3689416723328371,
    0.0,
    1.5539019430222982,
    0.0,
    -0.1722164273472998,
    0.0,
    -0.6359068055045431,
    0.0,
    -0.09911649873041208,
    0.0,
    0.14033480067387008,
    0.0,
    0.04782352019827292,
    0.0,
    -0.017356040641479782,
    0.0,
    -0.010225012534028593,
    0.0,
    0.0009274149159794888,
    0.0,
    0.0013572194372373386,
    0.0,
    6.41369012029388e-05,
    0.0,
    -0.0001230080569819663,
    0.0,
    -1.83135074047892e-05,
    0.0,
    7.821628604322627e-06,
    0.0,
    2.0087542484759946e-06,
    0.0,
    -3.3532765393185714e-07,
    0.0,
    -1.4616020917418232e-07,
];
pub(crate) const C3: [f64; 52] = [
    0.0,
    -0.0026794321814389136,
    0.0,
    0.02995372109103515,
    0.0,
    -0.042570172541828696,
    0.0,
    -0.28997965779803886,
    0.0,
    0.4888831999235446,
    0.0,
    1.230855876395746,
    0.0,
    -0.8297560708527408,
    0.0,
    -2.249763536666567,
    0.0,
    0.07845139961005472,
    0.0,
    1.7467492800868893,
    0.0,
    0.45968080979749937,
    0.0,
    -0.6619353471039775,
    0.0,
    -0.31590441036173633,
    0.0,
    0.12844792545207495,
    0.0,
    0.10073382716626152,
    0.0,
    -0.009530183848825268,
    0.0,
    -0.019264421687514088,
    0.0,
    -0.001246463715876929,
    0.0,
    0.0024243969641103086,
    0.0,
    0.000437647697741857,
    0.0,
    -0.00020714032687001792,
    0.0,
    -6.274344504186516e-05,
    0.0,
    1.157534381459567e-05,
    0.0,
    5.88385492454038e-06,
    0.0,
    -3.124677400696336e-07,
    0.0,
    -4.0240657754989595e-07,
];
pub(crate) const C4: [f64; 53] = [
    0.00046483389361763383,
    0.0,
    -0.004022642946136188,
    0.0,
    0.003847177051796127,
    0.0,
    0.06581175135809486,
    0.0,
    -0.19604124343694448,
    0.0,
    -0.20854053686358853,
    0.0,
    0.9507754185141751,
    0.0,
    0.5341535312914873,
    0.0,
    -1.67634944117634,
    0.0,
    -1.076747157875129,
    0.0,
    1.235339301656597,
    0.0,
    1.0257825340057276,
    0.0,
    -0.40124095793988546,
    0.0,
    -0.5036663995108304,
    0.0,
    0.03573487795502745,
    0.0,
    0.14431763086785418,
    0.0,
    0.01509152741790347,
    0.0,
    -0.026098874779194363,
    0.0,
    -0.006126628379519262,
    0.0,
    0.003077503129870841,
    0.0,
    0.0011562478934088753,
    0.0,
    -0.00022775966758472127,
    0.0,
    -0.00014189637118181445,
    0.0,
    7.4648603079559195e-06,
    0.0,
    1.2479701645409117e-05,
    0.0,
    4.863945184002094e-07,
    0.0,
    -8.210237414123167e-07,
];

/// `B_{2k}/(2k)!` for k = 1..=32.
pub(crate) const BERNOULLI_OVER_FACT: [f64; 32] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
    5.990671762482134e-34,
    -1.5174548844682903e-35,
    3.843758125454189e-37,
    -9.736353072646691e-39,
    2.466247044200681e-40,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
];

/// Ordinates of all zeros with 0 < γ < 1000, used as the exact count reference below that height.
pub(crate) const SMALL_ZEROS: [f64; 649] = [
    14.134725141734694, 21.022039638771555, 25.010857580145689, 30.424876125859513,
    32.93506158773919, 37.586178158825671, 40.918719012147495, 43.327073280915,
    48.00515088116716, 49.773832477672302, 52.970321477714461, 56.446247697063395,
    59.347044002602353, 60.83177852460981, 65.112544048081607, 67.079810529494174,
    69.546401711173979, 72.067157674481908, 75.704690699083933, 77.144840068874805,
    79.337375020249368, 82.91038085408603, 84.73549298051705, 87.425274613125229,
    88.809111207634465, 92.491899270558484, 94.651344040519887, 95.87063422824531,
    98.831194218193692, 101.31785100573139, 103.72553804047834, 105.44662305232609,
    107.16861118427641, 111.02953554316967, 111.87465917699264, 114.32022091545271,
    116.22668032085755, 118.79078286597622, 121.37012500242065, 122.94682929355259,
    124.25681855434577, 127.5166838795965, 129.57870419995605, 131.08768853093266,
    133.49773720299759, 134.75650975337387, 138.11604205453344, 139.73620895212139,
    141.12370740402112, 143.11184580762063, 146.00098248676552, 147.4227653425596,
    150.05352042078488, 150.92525761224147, 153.0246938111989, 156.11290929423787,
    157.59759181759406, 158.8499881714205, 161.18896413759603, 163.03070968718199,
    165.53706918790042, 167.18443997817451, 169.09451541556882, 169.9119764794117,
    173.41153651959155, 174.75419152336573, 176.44143429771042, 178.37740777609998,
    179.916484020257, 182.20707848436646, 184.87446784838751, 185.59878367770747,
    187.22892258350185, 189.41615865601694, 192.02665636071379, 193.0797266038457,
    195.26539667952924, 196.87648184095832, 198.01530967625191, 201.26475194370379,
    202.49359451414053, 204.18967180310455, 205.39469720216329, 207.90625888780621,
    209.57650971685626, 211.69086259536531, 213.34791935971267, 214.54704478349142,
    216.1695385082637, 219.06759634902138, 220.714918839314, 221.43070555469334,
    224.00700025460434, 224.98332466958229, 227.42144427967929, 229.33741330552535,
    231.25018870049916, 231.98723525318025, 233.6934041789083, 236.52422966581621,
    237.7698204809252, 239.55547757332763, 241.04915779621659, 242.8232719342226,
    244.07089849707816, 247.1369900748975, 248.10199006014846, 249.57368964470721,
    251.014947795016, 253.06998674799948, 255.30625645491402, 256.38071369443448,
    258.61043949153137, 259.874406989678, 260.80508450459687, 263.57389390487013,
    265.55785183887632, 266.61497378150107, 267.92191508282406, 269.9704490239976,
    271.494055641645, 273.45960918840329, 275.58749264934384, 276.45204950313294,
    278.25074352984195, 279.22925092774519, 282.4651147650521, 283.21118573323387,
    284.83596398090472, 286.66744536300288, 287.91192050142219, 289.57985492921883,
    291.8462913290674, 293.55843413935629, 294.96536961926554, 295.57325487895829,
    297.97927706194342, 299.84032605372131, 301.64932546219418, 302.69674958960692,
    304.8643713408573, 305.72891260203681, 307.21949612817005, 310.1094631467019,
    311.165141530356, 312.42780118060089, 313.98528573115892, 315.47561608947573,
    317.73480594237018, 318.8531042563166, 321.16013430911358, 322.14455867248293,
    323.46696955751205, 324.86286605173961, 327.44390126190546, 329.03307168048093,
    329.95323972823387, 331.47446758266342, 333.64537852486985, 334.21135483324438,
    336.84185042839068, 338.33999285080661, 339.85821672536354, 341.04226111104656,
    342.05487751036359, 344.66170294025234, 346.34787056600995, 347.27267758442048,
    349.31626087069614, 350.4084193491921, 351.87864902535928, 353.48890048871881,
    356.01757497726495, 357.15130225203962, 357.95268510163227, 359.74375495311445,
    361.28936169580465, 363.33133057897383, 364.73602411408899, 366.21271028833132,
    367.9935754817403, 368.96843809573439, 370.050919212106, 373.06192837211284,
    373.86487391090857, 375.82591276673933, 376.32409223066805, 378.43668024996548,
    379.87297534653235, 381.48446861718652, 383.44352944953649, 384.95611681486369,
    385.86130084597423, 387.22289022238798, 388.84612835423225, 391.45608356363805,
    392.2450833395191, 393.42774384443403, 395.58287001099372, 396.38185422259219,
    397.91873620961424, 399.9851198761949, 401.83922860053322, 402.86191776388611,
    404.236441800208, 405.13438745990993, 407.58146038689618, 408.94724550235111,
    410.51386919336664, 411.97226780427875, 413.26273607018505, 415.01880975515512,
    415.4552149962946, 418.38770578953478, 419.86136481815232, 420.64382762504179,
    422.07671005882676, 423.71657962748182, 425.06988249446135, 427.20882508407458,
    428.12791407661668, 430.32874543093864, 431.30130693070359, 432.13864173458857,
    433.88921848092723, 436.16100643264698, 437.58169816766858, 438.6217386562722,
    439.91844221437066, 441.68319920118902, 442.90454630260945, 444.31933627755916,
    446.86062269642952, 447.44170419449329, 449.1485456850233, 450.12694578031352,
    451.4033084453888, 453.98673780667792, 454.97468376861679, 456.32842668924605,
    457.90389306410297, 459.51341528110601, 460.08794442217584, 462.06536727488253,
    464.05728691054828, 465.67153921137109, 466.57028693082626, 467.43904621026164,
    469.53600455911203, 470.77365547810165, 472.79917466190882, 473.83523234513969,
    475.60033936937579, 476.76901523748452, 478.07526376667097, 478.94218153463483,
    481.83033937628656, 482.8347827909824, 483.85142721248254, 485.53914812935601,
    486.52871826165124, 488.38056709001745, 489.66176157795613, 491.39882159366301,
    493.3144415817853, 493.95799780536946, 495.35882882213128, 496.4296962157591,
    498.58078242968654, 500.3090849416905, 501.60444696514548, 502.27627032711823,
    504.49977331342774, 505.41523174224444, 506.46415270952353, 508.80070033646782,
    510.26422794367283, 511.5622897003746, 512.62314453140742, 513.66898555547368,
    515.43505716729938, 517.58966857246743, 518.23422314755014, 520.10631041172326,
    521.52519344949204, 522.45669617773021, 523.96053089201584, 525.07738568727962,
    527.90364160127235, 528.40621385229266, 529.8062263187069, 530.86691788396109,
    532.68818302829373, 533.77963075376873, 535.66431407587322, 537.06975908312233,
    538.42852617624796, 540.21316637622813, 540.63139024729512, 541.84743712120128,
    544.32389010100526, 545.63683324893482, 547.01091205812229, 547.93161336448934,
    549.49756756266138, 550.97001003948389, 552.04957220056489, 553.76497211915881,
    555.79202056168251, 556.89947640685535, 557.56465917205853, 559.31623702868216,
    560.24080749729567, 562.55920761604585, 564.16087911078612, 564.50605593814984,
    566.69878768280796, 567.73175790117694, 568.92395517962937, 570.05111478246359,
    572.41998413245276, 573.61461052675813, 575.09388601449489, 575.80724714092878,
    577.03900347209821, 579.09883467203661, 580.13695936238463, 581.94657626590163,
    583.23608821916728, 584.56170590346553, 585.9845632049883, 586.74277189125016,
    588.13966326624796, 590.66039751676528, 591.72585806504806, 592.57135830022557,
    593.97471468223103, 595.72815369738895, 596.36276832839368, 598.49307734616475,
    599.54564036436485, 601.60213673593264, 602.57916788638735, 603.62561890357916,
    604.61621849375323, 606.38346042210904, 608.41321731118733, 609.38957515472008,
    610.83916293773941, 611.7742096208872, 613.59977867563712, 614.64623787223262,
    615.53856336940703, 618.11283136644237, 619.18448259795363, 620.27289367222752,
    621.70929452794862, 622.37500273977901, 624.26990001817788, 626.01928342765438,
    627.26839685078302, 628.32586235946036, 630.47388743829205, 630.80578092719753,
    632.22514116711595, 633.54685825225178, 635.52380031060545, 637.39719315983731,
    637.92551398082258, 638.92793826685677, 640.69479466882567, 641.94549966570529,
    643.27888378139789, 644.990578229748, 646.34819159550159, 647.76175300428888,
    648.78640088878244, 650.19751934525646, 650.66868389139598, 653.64957160539469,
    654.30192058631934, 655.70946302235564, 656.96408459946062, 658.1756144186054,
    659.66384597296411, 660.71673259527927, 662.29658643110041, 664.24460465227301,
    665.34276309559904, 666.51514770417296, 667.14849489455543, 668.97584882023513,
    670.32358520586258, 672.45818358416973, 673.04357828614765, 674.35589781012317,
    676.13967436362675, 677.23018066876397, 677.80044474622133, 679.74219788252822,
    681.89499153315189, 682.60273501975055, 684.01354981386951, 684.97262986209845,
    686.16322358772795, 687.96154318470365, 689.36894136227237, 690.4747350323504,
    692.45168441552085, 693.17697006060182, 694.53390869987314, 695.72633592092673,
    696.62606990034561, 699.13209547601351, 700.29673913214349, 701.30174295464616,
    702.2273431457605, 704.03383929552531, 705.12581395461923, 706.18465479951792,
    708.2690708851099, 709.2295885702843, 711.13027417968543, 711.90028991437531,
    712.74938347010129, 714.08277182066939, 716.11239645405211, 717.48256970310019,
    718.74278654548589, 719.69710098836567, 721.35116221853642, 722.27750497567424,
    723.84582104512842, 724.56261389037908, 727.05640323004938, 728.40548158893406,
    728.75874979561427, 730.41648212275643, 731.41735491859853, 732.81805271449985,
    734.78964325237799, 735.76545920857832, 737.05292891226531, 738.58042117137382,
    739.90952367404194, 740.57380744729501, 741.75733557294167, 743.89501314247366,
    745.34498955061187, 746.49930589943233, 747.67456362426953, 748.24275446508455,
    750.6559503621243, 750.96638106665084, 752.88762156720237, 754.32237047171267,
    755.83930897603783, 756.76824843995093, 758.10172924641258, 758.90023822489237,
    760.28236698351206, 762.70003324969105, 763.59306617283722, 764.30752272418022,
    766.08754009983621, 767.21847215553951, 768.28146180650923, 769.69340725262442,
    771.07083931367832, 772.96161756575702, 774.11774462794051, 775.04784709658051,
    775.99971196317144, 777.29974852959256, 779.157076949189, 780.34892500418167,
    782.13766439081209, 782.59794394607354, 784.2888226124655, 785.73908970071505,
    786.46114745050628, 787.46846381591004, 790.05909236411956, 790.83162046792104,
    792.42770760860453, 792.88865256262259, 794.48379186989316, 795.60659615616241,
    797.26347003803558, 798.70757016629621, 799.65433621089763, 801.60424646298206,
    802.54198487841815, 803.24309620427019, 804.76223911266176, 805.8616356670948,
    808.15181493599375, 809.19778336330071, 810.0818048864071, 811.18435884650626,
    812.77110838910934, 814.04591360751099, 814.87053962587257, 816.72773771439472,
    818.38066886636168, 819.20464217082386, 820.72189844386929, 821.7134541333794,
    822.19775749340428, 824.52629387162975, 826.03928737657438, 826.90581095408077,
    828.3401743004899, 829.43701096830933, 830.8958840533174, 831.79977765907058,
    833.0036409091542, 834.65191514782558, 836.69357618759187, 837.34733505953151,
    838.24902199273215, 839.46539481028248, 841.03638982901342, 842.04135420652637,
    844.16619660735077, 844.80599397576373, 846.194769927694, 847.97171763951201,
    848.48928118094352, 849.86227434869783, 850.64544846600409, 853.16311258338916,
    854.09551171986906, 855.28671024440494, 856.48411749079166, 857.31074060260383,
    858.90402646647569, 860.41067089601467, 861.17109821271534, 863.18971977190893,
    864.34082393006954, 865.59466432651597, 866.42373990404264, 867.69312261178501,
    868.6704942291316, 870.84690232575402, 872.18875082161321, 873.09897897128198,
    873.90838923533753, 875.98528510878032, 876.60082583302744, 877.65469834103348,
    879.38095196979098, 880.83464884793939, 882.38669662719646, 883.43033183870165,
    884.19874311459473, 885.27230447961713, 886.8528019629163, 888.47556667381719,
    889.73529429409074, 890.81313211252806, 892.38643326015587, 893.11911756729426,
    894.88629232086872, 895.39791967478297, 896.63225155620272, 899.22152266838342,
    899.85888460793748, 900.8497398605214, 902.24320758675229, 903.09967444263045,
    904.70290272228132, 905.82994075822221, 907.65672946896753, 908.33354364506093,
    910.18633405717984, 911.2349514859555, 912.33104560003559, 912.8239992467434,
    914.73009695837561, 916.35500080864277, 917.82537757042678, 918.83653524352903,
    919.4483444396823, 921.15639550715485, 922.50062930663677, 923.28571980242224,
    924.77348393347666, 926.55155278460303, 927.85085898575359, 928.66365932893489,
    929.87409285064775, 931.00921133662807, 931.85274074552008, 934.38530683725846,
    934.99542486384646, 936.22864937928293, 937.53292571197038, 939.02430089921838,
    939.66094061452817, 941.15699964204237, 942.0523416433755, 944.18803580957274,
    945.33356250304595, 946.76584220472785, 947.07918309625488, 948.34664625504497,
    950.15161268464384, 951.03324873382351, 952.72798861985063, 954.12971926955142,
    954.82930893821664, 956.6754793432898, 957.51005259642372, 958.41459339013618,
    959.45916880706811, 961.66957247419275, 963.18208667131145, 963.56704019161227,
    965.05557962375112, 966.1107548184102, 967.37115376626285, 968.63630190608733,
    970.12561055694118, 971.07149148638573, 973.18536129430119, 973.8730789926536,
    974.77463506583743, 976.17850242058961, 976.91720211705062, 978.76667153511297,
    980.57800063977442, 981.28861530175897, 982.39648516877898, 983.57507600643133,
    985.18692865577344, 986.13051511018453, 986.75600840765604, 988.99262237065741,
    990.22391780402797, 991.37429414776151, 992.72869633673266, 993.21458095744295,
    994.40459057109449, 996.20533616429829, 997.51193475193923, 998.82754713692963,
    999.79157155741294,
];
