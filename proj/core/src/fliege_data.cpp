#include "grid_data.hpp"

namespace hrtfup::detail {

static const double kFliege4[][3] = {
    {359.9956670744881, 48.88092152560449, 0.19011002533727955},
    {138.20956155306666, 14.54631804557269, 0.3098899746627206},
    {274.3137305970468, -14.546318045572692, 0.3098899746627204},
    {52.52762507562528, -48.880921525604535, 0.19011002533727947},
};
static const double kFliege16[][3] = {
    {358.36245311756744, 69.97100099926371, 0.0638454523021723},
    {138.05950149973202, 54.755974844242125, 0.06496724367948095},
    {273.1544959142224, 43.6566711827255, 0.061421344022604414},
    {53.15674986599948, 33.41076301113353, 0.05404071732417116},
    {191.67068246015972, 26.525205635475313, 0.06586846186315151},
    {328.75639032247784, 18.0827211810884, 0.06110802761364185},
    {105.81222254115455, 10.461789500178012, 0.06119275009070944},
    {242.79413581768813, 3.6841385703523155, 0.06755600310406838},
    {19.82232493287952, -3.6841385703523337, 0.06755600310406826},
    {156.80423820941286, -10.461789500178003, 0.061192750090709284},
    {293.8600704280898, -18.082721181088377, 0.06110802761364178},
    {70.94577829040782, -26.52520563547535, 0.06586846186315143},
    {209.45971088456798, -33.410763011133454, 0.05404071732417117},
    {349.4619648363452, -43.656671182725496, 0.06142134402260459},
    {124.55695925083569, -54.755974844242104, 0.06496724367948088},
    {264.254007633, -69.97100099926371, 0.06384545230217238},
};
static const double kFliege36[][3] = {
    {357.2574022243666, 76.73135731278533, 0.026693241466304862},
    {139.27616037148817, 67.03660296768452, 0.030116900177434045},
    {271.9109720106745, 59.67791281680499, 0.027496785370246562},
    {54.55907125685277, 52.52771164258753, 0.024527275258046898},
    {193.76931312763932, 49.50082068728084, 0.02915518039919562},
    {329.2857880151958, 43.843427315465426, 0.02867030207707994},
    {105.9739296301654, 39.430721583275925, 0.02557899905755076},
    {241.68971357873025, 35.48300822028528, 0.028194322273412387},
    {18.440516880401084, 32.23447618015737, 0.031995437110484},
    {156.54704917689534, 28.78351000114245, 0.026136456674310173},
    {293.6393092646896, 24.87306657474328, 0.027452103672278756},
    {71.37406770145043, 20.74306249474017, 0.031603208443229405},
    {208.69933720767344, 17.504989330701818, 0.025156080632716956},
    {346.4480359310334, 14.017299397043354, 0.023279593540187632},
    {124.5928039781369, 10.952966158478338, 0.03146569713946913},
    {262.11019332837657, 7.868841486463893, 0.028120878435076584},
    {39.5802170983839, 4.810078263116362, 0.02286919417043876},
    {177.57110873167687, 1.680294511677935, 0.03148834410253735},
    {315.2006330196475, -1.680294511677926, 0.03148834410253735},
    {93.19152465294046, -4.810078263116402, 0.02286919417043886},
    {230.66154842294773, -7.868841486463931, 0.028120878435076598},
    {8.17893777318745, -10.952966158478302, 0.03146569713946915},
    {146.32370582029097, -14.0172993970433, 0.023279593540187618},
    {284.072404543651, -17.504989330701797, 0.025156080632716963},
    {61.39767404987386, -20.743062494740258, 0.03160320844322951},
    {199.13243248663477, -24.87306657474336, 0.027452103672278835},
    {336.224692574429, -28.783510001142457, 0.026136456674310297},
    {114.33122487092336, -32.23447618015736, 0.03199543711048397},
    {251.08202817259428, -35.483008220285264, 0.028194322273412384},
    {26.797812121158774, -39.430721583275925, 0.025578999057550667},
    {163.4859537361285, -43.84342731546544, 0.028670302077079848},
    {299.00242862368503, -49.5008206872809, 0.029155180399195648},
    {78.21267049447158, -52.52771164258757, 0.02452727525804697},
    {220.86076974064989, -59.677912816804906, 0.027496785370246527},
    {353.4955813798363, -67.0366029676846, 0.030116900177434},
    {135.51433952695803, -76.73135731278526, 0.02669324146630482},
};
static const double kFliege100[][3] = {
    {358.3441899603305, 81.50239256269838, 0.009548921259422643},
    {137.44522583537756, 76.66200998662008, 0.010044355018777814},
    {268.72991491208796, 72.19956782934766, 0.010613069733090896},
    {55.16791016211292, 66.89647468787184, 0.009849550149210573},
    {195.20769209637675, 66.8177464480542, 0.010377846153824314},
    {327.5345877052895, 62.59044560235784, 0.009756646978967169},
    {103.9706657631604, 60.035275408629296, 0.009959692979157565},
    {238.75231262016555, 57.231641825013064, 0.009296258443045775},
    {15.066686568124924, 57.29615881991386, 0.010454248586168134},
    {154.31809020554323, 55.59951648324485, 0.010138047954439466},
    {291.49750838117023, 52.93368379355089, 0.009808363585233596},
    {70.52991175640284, 48.74938123118014, 0.009480518853225265},
    {206.99970349805858, 47.529451019348556, 0.009563766290733152},
    {346.3093144266842, 45.62309363982891, 0.00980948577476303},
    {125.12168076069857, 44.70765412744144, 0.009979374935115594},
    {262.61352306551885, 43.696532452203876, 0.010241266873472816},
    {39.53413551267504, 42.9926324749236, 0.010260919517874233},
    {177.48908888064108, 41.869708753594495, 0.010392126674689205},
    {315.6608160387762, 40.01268801097103, 0.010627707212358695},
    {94.53869346999096, 37.898711432206305, 0.010347224618409347},
    {231.65279306291572, 36.23369191613913, 0.010336165747456954},
    {9.961858619839518, 35.129963500152506, 0.009719678287157403},
    {147.69959318198352, 33.78063496600221, 0.009968602835487715},
    {284.91329859287515, 32.08235981742888, 0.010053742515962309},
    {61.44122001333032, 29.971051895501457, 0.010223583952659342},
    {198.95392308963787, 28.642259840018106, 0.010045880321293795},
    {336.6040598594024, 27.291032050681395, 0.009546498567279122},
    {114.79241713296469, 26.128792538813176, 0.009670997942577258},
    {252.29336233281487, 25.164005417724738, 0.009849083081366885},
    {29.883050802684682, 24.02857184024843, 0.010368539938021042},
    {167.44165655732286, 23.036424156135674, 0.01003826269200545},
    {304.80036652936445, 21.802285439680027, 0.009802380411133725},
    {82.08533454950846, 20.58071075354967, 0.009958393434489251},
    {219.4057729703587, 19.301204634488776, 0.010110839076219678},
    {357.02344789715204, 18.263247669320453, 0.010757937599324316},
    {134.64176766108605, 17.015769303751025, 0.010240909155404805},
    {271.8689519662446, 15.730687745195583, 0.009921113521305591},
    {48.88826545041333, 14.079299886549583, 0.009489962009094903},
    {186.19670983153983, 12.97538587335975, 0.009887253352573828},
    {323.6314746830011, 11.837753942019333, 0.010375487230191986},
    {101.17974508642186, 10.840763599865474, 0.010166749546119496},
    {238.6160123644522, 9.819213906489555, 0.009864557952749152},
    {16.003720224714748, 8.675974082439218, 0.00947284279896006},
    {153.52530870920887, 7.5864703940105285, 0.009938715707824319},
    {290.96112305723153, 6.420820362181245, 0.010310370484748794},
    {68.40388162214397, 5.18672630843575, 0.010170495238848757},
    {205.77406977147345, 4.060161895050385, 0.009722786996648317},
    {343.3425370912482, 2.9984609035794754, 0.009340667968057267},
    {120.79858314973771, 1.8473614625103747, 0.009842743481239759},
    {258.11649628886664, 0.7235048553904284, 0.010255366561819575},
    {35.15214466487935, -0.7235048553904962, 0.01025536656181932},
    {172.4700578040083, -1.8473614625104153, 0.009842743481239319},
    {309.92610386249794, -2.998460903579481, 0.009340667968057234},
    {87.49457118227272, -4.060161895050453, 0.009722786996648667},
    {224.8647593316022, -5.186726308435815, 0.010170495238849052},
    {2.3075178965146717, -6.420820362181089, 0.010310370484748716},
    {139.74333224453738, -7.586470394010321, 0.009938715707823915},
    {277.2649207290315, -8.675974082439046, 0.009472842798959885},
    {54.65262858929381, -9.81921390648959, 0.00986455795274936},
    {192.08889586732414, -10.840763599865475, 0.010166749546119796},
    {329.637166270745, -11.837753942019397, 0.010375487230192054},
    {107.07193112220628, -12.97538587335992, 0.00988725335257349},
    {244.38037550333274, -14.07929988654974, 0.009489962009094664},
    {21.399688987501403, -15.730687745195636, 0.009921113521305739},
    {158.62687329266006, -17.01576930375111, 0.010240909155405141},
    {296.2451930565941, -18.26324766932042, 0.010757937599324422},
    {73.8628679833873, -19.301204634488716, 0.010110839076219416},
    {211.18330640423758, -20.58071075354963, 0.009958393434489028},
    {348.4682744243818, -21.80228543967989, 0.009802380411133783},
    {125.82698439642341, -23.036424156135475, 0.010038262692005695},
    {263.3855901510616, -24.028571840248283, 0.010368539938021122},
    {40.97527862093117, -25.164005417724823, 0.009849083081366776},
    {178.47622382078146, -26.128792538813286, 0.009670997942577067},
    {316.66458109434365, -27.29103205068148, 0.00954649856727902},
    {94.31471786410812, -28.642259840018173, 0.01004588032129397},
    {231.82742094041572, -29.97105189550154, 0.01022358395265951},
    {8.355342360870912, -32.082359817428916, 0.010053742515962213},
    {145.56904777176254, -33.78063496600222, 0.009968602835487549},
    {283.3067823339066, -35.12996350015246, 0.009719678287157297},
    {61.61584789083038, -36.23369191613913, 0.010336165747457039},
    {198.72994748375524, -37.89871143220634, 0.010347224618409466},
    {337.60782491497, -40.01268801097095, 0.010627707212358714},
    {115.77955207310508, -41.869708753594345, 0.010392126674689122},
    {253.7345054410712, -42.99263247492351, 0.010260919517874268},
    {30.655117888227227, -43.696532452203954, 0.010241266873472848},
    {168.1469601930475, -44.70765412744149, 0.009979374935115611},
    {306.9593265270619, -45.623093639828994, 0.009809485774763175},
    {86.26893745568755, -47.52945101934859, 0.009563766290733109},
    {222.73872919734342, -48.74938123118017, 0.009480518853225135},
    {1.7711325725758194, -52.933683793550934, 0.009808363585233596},
    {138.9505507482028, -55.599516483244834, 0.01013804795443956},
    {278.2019543856211, -57.29615881991384, 0.010454248586168117},
    {54.51632833358062, -57.231641825013035, 0.00929625844304568},
    {189.29797519058573, -60.03527540862928, 0.009959692979157593},
    {325.73405324845675, -62.59044560235781, 0.009756646978967116},
    {98.06094885736951, -66.81774644805414, 0.010377846153824359},
    {238.10073079163308, -66.89647468787186, 0.009849550149210629},
    {24.538726041658357, -72.19956782934771, 0.010613069733090947},
    {155.82341511836856, -76.6620099866201, 0.010044355018777706},
    {294.9244509934157, -81.50239256269833, 0.009548921259422668},
};
static const double kFliege400[][3] = {
    {1.318774319190822, 84.31662963238725, 0.0024723017819863824},
    {135.74540381485792, 84.56130393270772, 0.002463606456461717},
    {265.10073017847503, 82.16682433478783, 0.002514819630755222},
    {59.06454552610375, 77.81494188704619, 0.002404997236235662},
    {197.11364454266433, 78.14093314578007, 0.002527332313150507},
    {326.97991139546866, 75.66715602464146, 0.0023645798181633733},
    {104.91769625567805, 75.17154596554231, 0.0025886682750093154},
    {239.83603263407002, 73.54033088104791, 0.0024862103227024485},
    {13.888536035239419, 73.9814847594228, 0.0024682523232817687},
    {150.93458701691057, 74.28153258966664, 0.0024935849201377816},
    {289.3332518392078, 72.83810976559197, 0.0025812446031602664},
    {73.01693838390077, 68.43285034132997, 0.002491314766739383},
    {209.326035430087, 68.17406133241278, 0.0024464818940877387},
    {346.9938509017394, 67.41512254455239, 0.0025711396991906408},
    {125.51577102005429, 67.02095167293818, 0.0024950349893070756},
    {262.9840165229794, 66.90524736621428, 0.002545317491911851},
    {40.98247925677911, 67.94806353674677, 0.0026443935344958023},
    {178.46242502115237, 68.2242184457884, 0.0025771928089152038},
    {315.26363105054486, 65.87499061332726, 0.002663153272314965},
    {97.44956336418088, 64.58800361544617, 0.002464215255559563},
    {232.96647597612204, 63.418560330086976, 0.0024580759164973447},
    {11.662941557398042, 63.58008514064253, 0.0024524712925629087},
    {149.8853927155953, 63.660116604620946, 0.002463135905367137},
    {286.0232297564551, 62.54597930217768, 0.002409018155061336},
    {57.53909249652777, 60.34901959488108, 0.002432384742277661},
    {194.5183001269705, 60.06228501558874, 0.002510532172808926},
    {333.39684735780764, 59.2263611561336, 0.002393609949063167},
    {113.45625952719422, 57.8015441360222, 0.002375169699369035},
    {250.70403632261872, 58.05362100561222, 0.002393001324096974},
    {30.416606737905504, 58.72250742095342, 0.002444239164586636},
    {168.52507433236573, 58.76682204541324, 0.002505253317739268},
    {303.37678565983913, 57.39479379475569, 0.002405536407855968},
    {79.37967672490026, 57.80050894097185, 0.0024721809791100184},
    {215.7404356449138, 57.14552256819992, 0.0025049650688940186},
    {354.38670308928977, 56.82236757187737, 0.0024348353246645862},
    {133.00276077790997, 56.39001270431243, 0.0025171355706742563},
    {269.67275513239275, 55.70307541071625, 0.002502401253086891},
    {45.099045295039026, 52.70956898317433, 0.0025183076449117065},
    {182.47786000226435, 52.32618391732126, 0.002436756470138798},
    {319.5256587626227, 52.72053045426333, 0.0025288471865659084},
    {96.7377642665674, 53.08085661876557, 0.0025963946499888875},
    {234.33561979761598, 52.477549628304274, 0.0025664776886444064},
    {12.995786673629173, 52.86354150879534, 0.002580510395309223},
    {151.07851201078216, 52.798411127559895, 0.0025220983890239363},
    {287.2958242038753, 51.48500010128444, 0.0025961696745633966},
    {65.26853397784065, 50.837698010569916, 0.0025883051538297393},
    {202.05073763434189, 50.280571090637395, 0.0025631450609213693},
    {340.4433581940117, 49.7307006576959, 0.0026140768686944917},
    {118.40034746481155, 48.472268850113814, 0.00257792478809491},
    {254.89403475636308, 48.43488742454894, 0.0025864616919149142},
    {29.573897859244514, 48.01812597860652, 0.0024934322582347702},
    {167.01640139868087, 47.88651335763654, 0.0025081379504117173},
    {304.88488078071697, 47.03894724635481, 0.002493203283378722},
    {82.70388751605978, 47.284989142841965, 0.0025022497106938096},
    {220.33355646550012, 47.01645873532735, 0.0025149240696581555},
    {358.8590165427916, 46.880829451459384, 0.002620875287026847},
    {136.7696019262464, 46.54941756369305, 0.0026000689715971487},
    {273.3191461169563, 45.77409093285434, 0.0025673596051924274},
    {52.75615325008489, 44.25499078748756, 0.0024562294107425314},
    {189.64807988886156, 43.744918615503835, 0.0024780538365137207},
    {327.15828244742335, 44.22690618398511, 0.0024853006628563976},
    {104.02864750371309, 44.36191375897313, 0.00249125416022325},
    {241.254498084107, 43.651786645014354, 0.0025064647824548964},
    {16.628223890356907, 42.839953283829196, 0.002440555745658739},
    {154.0883121310142, 42.622810745492565, 0.002477681947875048},
    {292.2348288687973, 41.891812377225115, 0.002440757543851215},
    {70.53391988316541, 41.332830755497774, 0.002465519301602619},
    {208.37950596255155, 41.14548997836007, 0.0024938947958502884},
    {346.7811650392485, 40.828925936064124, 0.0024490594560851076},
    {125.11810003935392, 40.02845818514722, 0.0024323258727135064},
    {261.58645141604944, 39.834812158948466, 0.0024463259547378023},
    {39.23039397349762, 40.51778683905052, 0.0025488133949658686},
    {176.23728453160058, 40.110416889500705, 0.0025509469317309625},
    {314.37261905290563, 39.716554882265825, 0.0025295371097214157},
    {91.58182392967404, 39.53937231482931, 0.0025116374086396774},
    {228.83199295992196, 39.026685436693626, 0.002514287563458584},
    {5.064090863350978, 37.83312666216014, 0.0024317278153982665},
    {142.66562085257507, 37.42279903800779, 0.002484281155820072},
    {280.5709889934258, 37.245450714214535, 0.0024859612193646853},
    {59.221079223366345, 35.786214958346996, 0.002436976981256819},
    {196.99437678341715, 35.76994016389152, 0.0024323416240907714},
    {334.6227927789484, 36.220281826669414, 0.0024880061924220523},
    {112.11106327367666, 36.447061425472235, 0.0025312505234786047},
    {249.2876795566467, 35.74213211990073, 0.0024811499387968213},
    {26.852852239731668, 35.993161952939964, 0.002530937820656124},
    {164.1138658892555, 35.641873846128185, 0.002518614697425678},
    {302.16698506341925, 35.008726800075664, 0.0025128109637501685},
    {79.97588888374243, 34.47431840065396, 0.002545014264721469},
    {217.3872002977996, 33.980226507019964, 0.0025125474966992208},
    {354.2155104048296, 32.786576188722925, 0.0024893424645999578},
    {132.07984674499994, 31.955563167949364, 0.0024407164253073804},
    {269.58882921377216, 32.246501940719305, 0.002451879331812211},
    {47.0176040634094, 32.45094909860621, 0.002501307472434904},
    {184.5834503660816, 32.27691266725591, 0.002472485582161828},
    {322.5351908217055, 32.092024633491945, 0.0024877122542160375},
    {100.12185272726617, 32.132608091917604, 0.0025168089597187686},
    {237.4228325904627, 31.558909822181676, 0.002497714821026041},
    {15.040537525792413, 31.209360256758266, 0.002546795737513236},
    {152.55445328048202, 30.826857596095977, 0.002494761765753647},
    {290.24408184778196, 30.390973406573966, 0.0025024695198938274},
    {68.43230159280745, 29.397497667198, 0.002474254867851864},
    {205.86612477570395, 29.11247146932008, 0.0024674933824997644},
    {342.7269000654451, 28.79174437493357, 0.0024978211138920983},
    {120.10196191003614, 28.722858443374403, 0.0024935283629476486},
    {257.7725606369769, 28.349122657063706, 0.0024908648662707402},
    {35.339469988746316, 28.686460944846697, 0.002487482983636695},
    {172.84796039274767, 28.41541264304619, 0.0024803156113782877},
    {310.7852222114848, 27.970595101165003, 0.0024960142151396374},
    {88.59963394148508, 27.57452293340732, 0.0024644760529276694},
    {226.01967758369128, 27.06863453767605, 0.0024787028874771674},
    {3.554910811171052, 26.352909220579722, 0.0024660910399583328},
    {141.32057099491718, 25.784555075964327, 0.0024377055917105483},
    {278.7315249661302, 25.766630390696086, 0.002468343209180895},
    {55.953879130487444, 25.232525941949334, 0.0024577044022666117},
    {193.46356972016952, 25.1636198964669, 0.0024916374493386792},
    {330.97704841489747, 24.999232107153443, 0.0024837441315810607},
    {108.49426843329901, 25.030571250706156, 0.002465515195700562},
    {246.0439891135353, 24.533059748712233, 0.0025010323039694666},
    {23.805124445251597, 24.54191486220661, 0.0024748208142410383},
    {161.3643138150089, 24.182454264160537, 0.002514149539226744},
    {299.04432419818596, 23.812999540971614, 0.0025049237476645406},
    {77.02150905838386, 23.066292925226744, 0.0024639546879173667},
    {214.41638642031072, 22.671559068470607, 0.0024772792038013436},
    {351.5395177433958, 22.025947841062333, 0.0024260909725585434},
    {128.87001419295783, 21.626741809144473, 0.0024589618860085347},
    {266.6312671917434, 21.624528503138244, 0.0024867860462480977},
    {44.02041203474995, 21.698900323988486, 0.002486461492793875},
    {181.54954629973028, 21.519662140696724, 0.0025347932918800505},
    {319.2177839223964, 21.14778299799942, 0.002503676764700505},
    {96.97193278551752, 20.91998743409707, 0.0025221175121841804},
    {234.48479675645, 20.44811631065695, 0.0025154385637040882},
    {12.243351899957803, 20.142737698240705, 0.002501250458467989},
    {149.9355607424718, 19.649348596461763, 0.0025487464370765696},
    {287.36092812509736, 19.469096116503632, 0.002516377051524048},
    {64.72750703544101, 19.00191533413977, 0.0025501607455042405},
    {202.13948480692628, 18.751039777363548, 0.002533212476445019},
    {339.51755261949614, 18.297023839869304, 0.0024833514758907326},
    {116.96519841619522, 18.17986665782126, 0.0025297854259325094},
    {254.61044614569656, 17.876114066258495, 0.002513162067241871},
    {32.275856843817664, 17.96164626446143, 0.0025376098019358226},
    {169.83310783212235, 17.660297545680635, 0.0025232416645969446},
    {307.3797645392246, 17.286042771812557, 0.00251312447552122},
    {85.23591724982774, 16.74494414749112, 0.0025511376530115925},
    {222.67887167648698, 16.34737449636599, 0.002530578812527123},
    {0.13148980488618248, 15.958984683993995, 0.0025874189090118204},
    {137.58030687967383, 15.621961801438584, 0.002594132790602364},
    {275.2312847823084, 15.467920684211695, 0.002546703986134803},
    {52.48332125932242, 15.093318492357936, 0.0025561849379941493},
    {190.00297765678675, 14.966092056360825, 0.0025037175807562533},
    {327.5592539368633, 14.645781465304392, 0.0025289429604963788},
    {105.23035841689045, 14.477196486059407, 0.0025270270966608627},
    {242.75448897143082, 14.046361791942735, 0.0025074881513221362},
    {20.494516033197435, 13.927657890042592, 0.0025330770100971205},
    {158.15395817339302, 13.499852490978679, 0.0024602916376783948},
    {295.6000545925247, 13.278450790602674, 0.0025041906846969427},
    {73.03405930635104, 12.87423519625819, 0.0025218535657921424},
    {210.44350955380654, 12.548721304111643, 0.0025148212477619234},
    {347.84761870872063, 11.979338083338476, 0.002578786165461417},
    {125.25899219192175, 11.663232260453917, 0.002507923362048863},
    {262.9901625811777, 11.60977388034418, 0.0025117819670736367},
    {40.51662298094169, 11.51843611120395, 0.002498517604147834},
    {178.06565299476452, 11.298161253053804, 0.0024630597453389985},
    {315.5037518377614, 10.95197875007802, 0.002505055994825962},
    {93.27917870470452, 10.575080058132299, 0.002452751099322628},
    {230.7409566972637, 10.18452701704776, 0.0024701856680633353},
    {8.339731975376077, 9.9860823141695, 0.0024558137692591996},
    {145.8235568366995, 9.638667106002517, 0.0024194744370315035},
    {283.4379800547264, 9.387158291218103, 0.002473452572739459},
    {60.784954802495974, 9.034621753243798, 0.002447074476989007},
    {198.23774012775107, 8.787103817403937, 0.002483700696667139},
    {335.69754281350396, 8.334815640535648, 0.0024998518249597645},
    {113.28648532777936, 8.103544186169117, 0.0024527585571243278},
    {250.87350716073334, 7.860548947456153, 0.0024818993367180567},
    {28.572362070831, 7.829349954733199, 0.002446898000939293},
    {166.20870609186105, 7.438281315098078, 0.002505526029992337},
    {303.5772749469108, 7.091961338864876, 0.0024876036916781433},
    {81.05056264599399, 6.761312548258427, 0.002455801497534687},
    {218.47486542388665, 6.419059989425139, 0.0024799276048918188},
    {356.0537892446191, 6.067955005959624, 0.0024032378864235213},
    {133.52319480888943, 5.777018278543323, 0.002448695333437514},
    {271.188135984687, 5.6172559457540565, 0.002469477043061457},
    {48.57134105196883, 5.237951648037553, 0.002454520338525305},
    {186.1130169013315, 5.065456934449257, 0.002513321372681537},
    {323.51331243067403, 4.790899424332712, 0.0024644602920658957},
    {101.23602192045054, 4.510828803916736, 0.0025006970530711222},
    {238.6851016882586, 4.115307204768672, 0.002514882857485822},
    {16.316106749189494, 4.000421835424337, 0.0025197955022287924},
    {153.83791303638355, 3.675838134064403, 0.00259966159381894},
    {291.42993841035434, 3.358523841588971, 0.002522101758047955},
    {68.83122784650166, 3.02470706749128, 0.0025302610941722783},
    {206.26200822350302, 2.7205015661267296, 0.0025120496072066297},
    {343.73258570813863, 2.2282082378602532, 0.002447005347852303},
    {121.25548962571906, 1.8900422353254938, 0.0025214228841476337},
    {258.9282480574254, 1.8509426713886084, 0.002499755849925577},
    {36.495601006993816, 1.6606911064853664, 0.002527437856677383},
    {174.16119022394187, 1.3495315167904935, 0.002523841787545301},
    {311.50804693315285, 1.0060159140745049, 0.00251285151770203},
    {89.00446083532093, 0.7497075773876869, 0.0025790502185853766},
    {226.4230304783844, 0.3948236481894114, 0.0025477586401480524},
    {4.065070278595519, 0.1569014562888507, 0.002594323422965133},
    {141.5327856865025, -0.15690145628888152, 0.002594323422958741},
    {279.1748254867134, -0.3948236481898268, 0.002547758640156027},
    {56.59339512977683, -0.7497075773881878, 0.0025790502185888504},
    {194.08980903194524, -1.0060159140745197, 0.0025128515176839655},
    {331.4366657411562, -1.3495315167905926, 0.0025238417875562092},
    {109.10225495810417, -1.660691106485521, 0.0025274378566840323},
    {246.66960790767263, -1.8509426713887527, 0.0024997558499127407},
    {24.34236633937873, -1.8900422353258348, 0.0025214228841598883},
    {161.86527025695946, -2.2282082378601937, 0.002447005347847385},
    {299.33584774159505, -2.7205015661266594, 0.002512049607201811},
    {76.76662811859654, -3.0247070674906027, 0.0025302610941908567},
    {214.1679175547439, -3.358523841588557, 0.002522101758030737},
    {351.75994292871474, -3.6758381340641484, 0.0025996615938223737},
    {129.28174921590866, -4.000421835424117, 0.0025197955022409173},
    {266.91275427683945, -4.1153072047687616, 0.002514882857471175},
    {44.361834044647416, -4.510828803916889, 0.0025006970530835047},
    {182.0845435344241, -4.790899424332594, 0.0024644602920654056},
    {319.4848390637667, -5.065456934449137, 0.002513321372668908},
    {97.0265149131291, -5.2379516480376465, 0.0024545203385378926},
    {234.40971998041093, -5.617255945754095, 0.0024694770430542354},
    {12.07466115620867, -5.777018278543143, 0.002448695333439339},
    {149.54406672047907, -6.067955005959328, 0.0024032378864346617},
    {287.12299054121166, -6.4190599894247065, 0.0024799276048750444},
    {64.54729331910451, -6.761312548257763, 0.0024558014975410818},
    {202.0205810181875, -7.091961338864803, 0.002487603691687699},
    {339.3891498732373, -7.438281315097988, 0.002505526029982675},
    {117.025493894267, -7.8293499547335035, 0.002446898000944663},
    {254.72434880436464, -7.860548947456262, 0.0024818993367164218},
    {32.31137063731848, -8.103544186169197, 0.0024527585571196054},
    {169.900313151594, -8.334815640535702, 0.002499851824973627},
    {307.3601158373468, -8.787103817403914, 0.0024837006966578184},
    {84.81290116260156, -9.03462175324423, 0.0024470744769769823},
    {222.15987591037134, -9.38715829121854, 0.002473452572756822},
    {359.77429912839864, -9.638667106002613, 0.002419474437026154},
    {137.258123989722, -9.986082314169517, 0.0024558137692553155},
    {274.8568992678343, -10.184527017048104, 0.0024701856680672952},
    {52.31867726039342, -10.57508005813262, 0.002452751099312034},
    {190.09410412733683, -10.951978750077943, 0.002505055994839047},
    {327.5322029703336, -11.29816125305377, 0.0024630597453389556},
    {105.08123298415623, -11.518436111204032, 0.002498517604132278},
    {242.60769338392015, -11.609773880344285, 0.0025117819670888836},
    {20.338863773175962, -11.663232260454343, 0.002507923362042566},
    {157.75023725637723, -11.979338083338506, 0.002578786165454031},
    {295.15434641129144, -12.548721304111714, 0.0025148212477746814},
    {72.56379665874718, -12.874235196257857, 0.002521853565779126},
    {209.99780137257358, -13.278450790602516, 0.002504190684702153},
    {347.44389779170535, -13.499852490978538, 0.0024602916376817202},
    {125.10333993190089, -13.927657890042466, 0.00253307701008405},
    {262.8433669936673, -14.046361791942813, 0.0025074881513334445},
    {40.36749754820738, -14.477196486059475, 0.0025270270966589246},
    {178.03860202823478, -14.64578146530413, 0.0025289429604852995},
    {315.5948783083112, -14.966092056360571, 0.0025037175807690504},
    {93.11453470577533, -15.093318492357923, 0.0025561849379959712},
    {230.36657118278944, -15.467920684211768, 0.002546703986129165},
    {8.017549085424303, -15.621961801438587, 0.0025941327906042373},
    {145.466366160212, -15.958984683993817, 0.002587418909005531},
    {282.91898428861145, -16.347374496365727, 0.0025305788125353046},
    {60.36193871527084, -16.744944147490493, 0.002551137653016797},
    {198.2180914258737, -17.28604277181243, 0.002513124475505429},
    {335.76474813297597, -17.66029754568042, 0.002523241664601947},
    {113.32199912128034, -17.961646264461486, 0.0025376098019442637},
    {250.9874098194014, -17.87611406625849, 0.0025131620672335943},
    {28.632657548902568, -18.17986665782137, 0.002529785425937171},
    {166.0803033456017, -18.297023839869297, 0.0024833514758869336},
    {303.45837115817164, -18.75103977736361, 0.0025332124764446437},
    {80.8703489296567, -19.001915334140296, 0.0025501607455183793},
    {218.2369278400005, -19.469096116504137, 0.0025163770515095577},
    {355.6622952226265, -19.64934859646192, 0.0025487464370772383},
    {133.35450406514053, -20.142737698240754, 0.002501250458480238},
    {271.11305920864817, -20.448116310657078, 0.0025154385636941743},
    {48.62592317958059, -20.919987434096974, 0.0025221175121886486},
    {186.38007204270178, -21.147782997999112, 0.0025036767647012826},
    {324.04830966536775, -21.519662140696443, 0.0025347932918750754},
    {101.57744393034783, -21.698900323988408, 0.002486461492802011},
    {238.9665887733544, -21.62452850313834, 0.0024867860462406436},
    {16.72784177213988, -21.626741809145056, 0.002458961886010173},
    {154.05833822170203, -22.02594784106257, 0.0024260909725695823},
    {291.18146954478726, -22.671559068470874, 0.002477279203789194},
    {68.57634690671429, -23.06629292522669, 0.0024639546879183234},
    {206.5535317669122, -23.81299954097169, 0.002504923747673317},
    {344.2335421500893, -24.182454264160395, 0.002514149539223236},
    {121.79273151984661, -24.541914862206372, 0.0024748208142423996},
    {259.55386685156276, -24.53305974871213, 0.0025010323039676135},
    {37.10358753179894, -25.0305712507061, 0.002465515195698707},
    {174.62080755020054, -24.99923210715301, 0.002483744131590745},
    {312.13428624492855, -25.16361989646657, 0.002491637449330628},
    {89.64397683461043, -25.232525941949465, 0.002457704402256273},
    {226.8663309989677, -25.766630390696335, 0.0024683432091934334},
    {4.277284970180948, -25.78455507596459, 0.002437705591710221},
    {142.0429451539273, -26.352909220579825, 0.0024660910399536932},
    {279.57817838140704, -27.068634537676026, 0.002478702887478748},
    {56.99822202361332, -27.574522933406794, 0.0024644760529228408},
    {194.81263375361343, -27.97059510116481, 0.002496014215147421},
    {332.7498955723505, -28.41541264304582, 0.0024803156113774893},
    {110.25838597635165, -28.686460944846477, 0.0024874829836259325},
    {247.82529532812097, -28.349122657063567, 0.002490864866280135},
    {25.495894055061694, -28.7228584433745, 0.002493528362946305},
    {162.87095589965273, -28.79174437493356, 0.0024978211138865346},
    {299.73173118939394, -29.11247146932026, 0.0024674933825051247},
    {77.16555437229029, -29.397497667198536, 0.0024742548678463655},
    {215.3537741173159, -30.390973406574464, 0.0025024695198955006},
    {353.04340268461596, -30.826857596096065, 0.0024947617657542403},
    {130.5573184393058, -31.20936025675813, 0.0025467957375050346},
    {268.17502337463566, -31.558909822181594, 0.0024977148210339204},
    {45.4760032378324, -32.132608091917234, 0.002516808959719529},
    {183.06266514339282, -32.09202463349145, 0.002487712254207458},
    {321.0144055990168, -32.27691266725557, 0.002472485582167382},
    {98.58025190168858, -32.450949098606145, 0.0025013074724378544},
    {236.00902675132568, -32.2465019407195, 0.0024518793318104256},
    {13.518009220097698, -31.955563167950192, 0.002440716425305238},
    {151.38234556026836, -32.786576188723565, 0.0024893424645950285},
    {288.21065566729806, -33.980226507020475, 0.0025125474967069893},
    {65.62196708135505, -34.474318400654106, 0.002545014264725366},
    {203.4308709016784, -35.00872680007581, 0.0025128109637388776},
    {341.4839900758423, -35.64187384612801, 0.002518614697428025},
    {118.74500372536644, -35.993161952939566, 0.0025309378206649284},
    {256.3101764084517, -35.74213211990035, 0.0024811499387901166},
    {33.486792691422075, -36.44706142547185, 0.002531250523478353},
    {170.9750631861503, -36.2202818266687, 0.002488006192422398},
    {308.6034791816816, -35.76994016389106, 0.0024323416240954764},
    {86.3767767417318, -35.78621495834725, 0.0024369769812639898},
    {225.02686697167226, -37.24545071421499, 0.002485961219354562},
    {2.9322351125224424, -37.42279903800831, 0.0024842811558211243},
    {140.53376510174672, -37.83312666216039, 0.0024317278154087946},
    {276.7658630051754, -39.02668543669401, 0.0025142875634484325},
    {54.01603203542351, -39.539372314829386, 0.0025116374086393578},
    {191.2252369121916, -39.71655488226586, 0.0025295371097269832},
    {329.3605714334973, -40.1104168895006, 0.002550946931728902},
    {106.36746199160063, -40.51778683905026, 0.0025488133949669862},
    {244.01140454904913, -39.834812158948075, 0.002446325954735855},
    {20.479755925745206, -40.02845818514717, 0.0024323258727164286},
    {158.81669092585074, -40.828925936064074, 0.0024490594560912632},
    {297.2183500025475, -41.14548997835973, 0.002493894795838799},
    {75.06393608193245, -41.332830755497774, 0.002465519301600705},
    {213.3630270963005, -41.891812377225364, 0.0024407575438608795},
    {351.5095438340831, -42.62281074549268, 0.0024776819478731335},
    {128.96963207474067, -42.83995328382908, 0.0024405557456548418},
    {264.3433578809901, -43.65178664501463, 0.0025064647824596708},
    {41.56920846138451, -44.36191375897329, 0.002491254160224285},
    {178.4395735176739, -44.22690618398511, 0.002485300662857264},
    {315.9497760762365, -43.744918615503835, 0.002478053836507331},
    {92.84170271501367, -44.25499078748764, 0.0024562294107367162},
    {232.27870984814228, -45.77409093285449, 0.002567359605200896},
    {8.828254038852315, -46.549417563692984, 0.002600068971596313},
    {146.73883942230714, -46.880829451459135, 0.0026208752870177515},
    {285.26429949959874, -47.016458735326985, 0.0025149240696659197},
    {62.89396844903811, -47.2849891428419, 0.0025022497106931925},
    {200.7129751843807, -47.03894724635459, 0.0024932032833777356},
    {338.58145456641665, -47.886513357636574, 0.0025081379504117043},
    {116.0239581058533, -48.018125978606406, 0.0024934322582301047},
    {250.70382120873415, -48.43488742454905, 0.002586461691915607},
    {27.197508500286347, -48.472268850114204, 0.0025779247880925037},
    {165.1544977710861, -49.73070065769642, 0.0026140768686910014},
    {303.54711833075606, -50.280571090637444, 0.0025631450609307016},
    {80.32932198725753, -50.83769801056971, 0.002588305153831301},
    {218.302031761223, -51.48500010128449, 0.0025961696745568984},
    {354.5193439543161, -52.79841112755967, 0.002522098389025959},
    {132.60206929146935, -52.86354150879493, 0.002580510395314191},
    {271.26223616748285, -52.47754962830396, 0.0025664776886426856},
    {48.86009169853053, -53.080856618765594, 0.002596394649988221},
    {186.07219720247494, -52.72053045426325, 0.0025288471865638606},
    {323.11999596283323, -52.32618391732148, 0.002436756470144344},
    {100.49881067005904, -52.709568983174606, 0.002518307644915685},
    {235.92510083270494, -55.70307541071669, 0.0025024012530816026},
    {12.5950951871877, -56.390012704312625, 0.0025171355706740473},
    {151.211152875808, -56.822367571877486, 0.0024348353246711123},
    {289.857420320184, -57.14552256819989, 0.002504965068887248},
    {66.21817924019783, -57.80050894097171, 0.0024721809791105557},
    {202.22107030525873, -57.39479379475522, 0.0024055364078564576},
    {337.07278163273253, -58.766822045413065, 0.0025052533177365266},
    {115.18124922719319, -58.72250742095316, 0.0024442391645886864},
    {254.89381964248008, -58.0536210056119, 0.002393001324095996},
    {32.14159643790371, -57.80154413602254, 0.002375169699370745},
    {172.20100860729076, -59.22636115613406, 0.002393609949065778},
    {311.079555838127, -60.06228501558892, 0.0025105321728001737},
    {88.05876346856986, -60.349019594881014, 0.0024323847422763147},
    {219.57462620864183, -62.54597930217798, 0.0024090181550678724},
    {355.71246324950243, -63.660116604620974, 0.0024631359053664606},
    {133.93491440769995, -63.58008514064238, 0.0024524712925574426},
    {272.6313799889759, -63.418560330086976, 0.002458075916499465},
    {48.148292600917486, -64.58800361544621, 0.0024642152555591165},
    {190.3342249145542, -65.87499061332731, 0.002663153272315213},
    {327.13543094394566, -68.2242184457882, 0.0025771928089198155},
    {104.615376708319, -67.94806353674639, 0.002644393534491961},
    {242.6138394421188, -66.90524736621391, 0.0025453174919167656},
    {20.08208494504353, -67.02095167293845, 0.00249503498930758},
    {158.6040050633584, -67.41512254455256, 0.0025711396991837244},
    {296.27182053501065, -68.17406133241296, 0.002446481894097389},
    {72.58091758119744, -68.43285034132997, 0.002491314766740255},
    {216.26460412589168, -72.83810976559234, 0.002581244603149617},
    {354.663268948187, -74.28153258966672, 0.0024935849201372855},
    {131.70931992985814, -73.98148475942267, 0.0024682523232909055},
    {265.76182333102713, -73.54033088104791, 0.0024862103226952},
    {40.68015970942044, -75.17154596554231, 0.0025886682750065892},
    {178.61794456962983, -75.66715602464134, 0.0023645798181706557},
    {308.484211422434, -78.14093314578, 0.002527332313141199},
    {86.53331043899499, -77.81494188704603, 0.002404997236238661},
    {240.49712578662445, -82.1668243347882, 0.0025148196307681813},
    {9.85245215024187, -84.56130393270772, 0.0024636064564683927},
    {144.27908164590693, -84.31662963238698, 0.002472301781971427},
};
static const double kFliege625[][3] = {
    {1.1409577091921386, 85.55507701590689, 0.0016317363927695074},
    {136.30603334630047, 85.63414131351591, 0.0015104346750312108},
    {265.7681895958803, 83.58405050035044, 0.001620397037121698},
    {58.613431272054825, 80.25878227872256, 0.0014423011568791538},
    {197.03286716367901, 80.55573209990455, 0.0017150233250838478},
    {327.0643619853994, 78.61237760232653, 0.0014679834990407785},
    {104.8434165389067, 78.22860027370446, 0.0018117735567603115},
    {239.46375853157588, 76.8455961052856, 0.0015022642935059493},
    {14.107528441531926, 77.22247802914859, 0.0016191035807134864},
    {151.31878902814168, 77.38645873012193, 0.0015307630312916178},
    {290.09917497275603, 76.11184046218368, 0.0016810030436890228},
    {73.00972110383024, 72.84395742964327, 0.0016146379646359676},
    {209.2121635729872, 72.60375452082472, 0.0014989749885927198},
    {346.92633968585244, 72.0188157264913, 0.0016391337089924018},
    {125.33353005759585, 71.73834803466964, 0.001506425509783077},
    {263.0172511941102, 71.73166709819064, 0.0016976051362953793},
    {41.067576116254536, 72.28696845605785, 0.0017583972378848692},
    {178.6391591257684, 72.52332115306665, 0.0016572794031882428},
    {315.79212643235167, 70.69394233578535, 0.0017054947399579158},
    {97.30137373176592, 69.76218533094867, 0.0014370787324635079},
    {232.72599772414534, 68.76693481828595, 0.0016806406189892587},
    {11.396596134405224, 68.95050015205781, 0.0015312031075805654},
    {149.48931137957229, 68.96231917309998, 0.0017158317212710135},
    {285.4865811618233, 67.9817680193747, 0.0014539190178071263},
    {58.08251775585554, 66.34999851367633, 0.001482402651322829},
    {195.00780900892713, 66.08486483974153, 0.0016525084339998435},
    {333.88167221455365, 65.35210857695108, 0.0015675347645372302},
    {113.34484607576552, 64.38990305644708, 0.0017208507836933642},
    {250.67749999252572, 64.69509166273016, 0.0014432498695816614},
    {29.880036751639715, 65.10236389047003, 0.0015246629487024425},
    {167.99605879089597, 65.18697318519743, 0.001511586524065843},
    {303.0062302401682, 64.19283413636128, 0.001616090842093195},
    {79.46006498260869, 64.31587778057464, 0.0016849373657706836},
    {215.86989500539528, 63.75917397636976, 0.0015727476387951563},
    {354.5637102791124, 63.548932529739986, 0.0015711749662505672},
    {132.9609117562566, 63.25490952778843, 0.0015334595776587156},
    {269.54387107161, 62.66220012145216, 0.001639740565373154},
    {45.26515841923241, 60.658279458885474, 0.0016656420000429714},
    {182.60760043231724, 60.33166793841098, 0.0016102671992699927},
    {319.5812476582361, 60.582267535630336, 0.001535925091303065},
    {96.92930504416834, 60.62366004581036, 0.0016320071377947413},
    {234.72964169166687, 60.118906890223144, 0.0016113483699896733},
    {13.096961260640507, 60.34585960874861, 0.0017133864778576733},
    {151.05439855876165, 60.28966620168374, 0.001581341730581661},
    {287.55572094240347, 59.25362190121561, 0.0016952314350965336},
    {65.67172540849704, 58.72086450337677, 0.001662264418376766},
    {202.557710875177, 58.2955481836572, 0.0016209304173636886},
    {341.05525887966604, 57.85824966535266, 0.0016329304152149268},
    {119.1875154395989, 57.059477103656384, 0.0015071835573925718},
    {255.50068684500397, 57.03573125731246, 0.0017272961665383208},
    {30.522618349454042, 56.68460025795614, 0.001597222519844374},
    {167.80855578216804, 56.637312226267184, 0.001649179711092303},
    {305.76192782744437, 56.00518779436108, 0.0015659608590400584},
    {83.45055864143033, 56.05934943056507, 0.0015233487499395806},
    {221.18000250733303, 55.842953815734944, 0.0016441964828266544},
    {359.4555345501117, 55.68809372584996, 0.0016515455875572864},
    {137.34605992154513, 55.428070556147745, 0.001761292127068746},
    {274.14599335336953, 54.85938728690968, 0.0016019187758899804},
    {53.2033468541381, 53.92502516816241, 0.0015660506746406977},
    {190.26041652080713, 53.539950167231936, 0.0015241693624835067},
    {327.84321851796216, 53.908895760645756, 0.0016880885826600803},
    {105.2003080153639, 53.912493075546315, 0.0015723350310381816},
    {242.40562263400375, 53.27754763713938, 0.0016257074274933872},
    {18.264306167645216, 52.64402718185511, 0.0015226811060831606},
    {155.72158211561566, 52.4474266151418, 0.0016159855257928493},
    {293.8764568155645, 51.88151434140059, 0.0015289796697957},
    {71.9964020643142, 51.407389232504386, 0.0015845368579302922},
    {209.79141404198177, 51.27224649313555, 0.0016101669593209735},
    {347.9885470259365, 50.94089404881963, 0.0015917005684763258},
    {126.12998147997226, 50.38726868306392, 0.0016154926377329462},
    {262.8195993666594, 50.347926565274754, 0.0014845065891629968},
    {40.36190459215031, 50.794189570752444, 0.0015647198338575},
    {177.4779015734991, 50.57257067491711, 0.0015848565810369242},
    {315.5491579145152, 50.28931429904611, 0.0016332136142512069},
    {93.0327101845098, 50.18972384079335, 0.0016911939695854403},
    {230.3234271674148, 49.74292891251725, 0.001574046571035357},
    {7.023657783724069, 48.97256717805964, 0.0015610569830711981},
    {144.6489918809452, 48.674620764709644, 0.0015021881619273576},
    {282.48669862025326, 48.50063999071391, 0.001603266933477469},
    {60.86160388607612, 47.568047538637146, 0.0015588061765500593},
    {198.52908930099272, 47.511314957299845, 0.0016204629463629566},
    {336.0813951008198, 47.72589616571321, 0.0015028834701342087},
    {113.63720528111887, 47.687904432417234, 0.001699533299816779},
    {251.00290582106618, 47.19300070906016, 0.001522522161136463},
    {28.488549780880916, 47.2255646230773, 0.0016350966732905725},
    {165.8773820731235, 47.008599183015015, 0.001534284764912502},
    {303.8702106191571, 46.5159185375893, 0.0016339360640702254},
    {81.75714826858858, 46.19325395298116, 0.0016089089863742963},
    {219.19288995494924, 45.837894672022365, 0.0015324638567136436},
    {356.43764783792096, 45.10828075142873, 0.0015427962100836529},
    {134.28075690329314, 44.60438986949141, 0.0014765972175408383},
    {271.6663249157991, 44.75788435254566, 0.0016339684211230283},
    {49.09482506368317, 44.771375098056424, 0.0016484622495460774},
    {186.56874774844917, 44.61854332185531, 0.0016369617113297663},
    {324.43183654756865, 44.54256379270084, 0.0015196618434451916},
    {102.0065899750923, 44.50142915191318, 0.001535038645309587},
    {239.43265110274157, 44.0390859945988, 0.0016007623022294012},
    {17.00263628769634, 43.63945223486509, 0.0016284194532373802},
    {154.5903564822308, 43.37122892178689, 0.0016023615515433512},
    {292.2436719151846, 43.006787570370335, 0.0015971957779103312},
    {70.28884561507948, 42.40466671595767, 0.0015815981524542168},
    {207.75225641398296, 42.234693874641316, 0.001504761093684522},
    {344.9375038782538, 42.04320798529231, 0.0016324996874862948},
    {122.40835630892278, 41.8442252720982, 0.0014731065795394558},
    {260.09661496446074, 41.599443787872374, 0.0016905039087396728},
    {37.646511979431565, 41.83132189452515, 0.0016257435764316618},
    {175.1694077751106, 41.62784026716649, 0.0016646947551311716},
    {313.03892482878416, 41.320126152626386, 0.0015530692389700883},
    {90.82905363407178, 41.0560099314536, 0.0015316908180598985},
    {228.30650375965166, 40.68424120057058, 0.0016805059747474302},
    {5.896186717673108, 40.119497586639994, 0.0016491657091884603},
    {143.63703199629663, 39.7659523619121, 0.0017118668815163413},
    {280.99658254054725, 39.73389155636214, 0.0015382180813502278},
    {58.305611764038694, 39.32258312672948, 0.001545992628650007},
    {195.78145851645795, 39.270377948014, 0.001523520464085447},
    {333.3740993757268, 39.211881304462985, 0.0017165498452797626},
    {110.88598806435199, 39.141823948851446, 0.0015664714867758677},
    {248.47081804708097, 38.758041472898576, 0.0016403621690843301},
    {26.181924233462144, 38.678757188154094, 0.0015581689135970426},
    {163.77870381585623, 38.435850564379, 0.0016617710099193156},
    {301.3736953471271, 38.118264411770156, 0.0015813478150396591},
    {79.26976977954796, 37.71268242962483, 0.0016002544517507028},
    {216.67675747517362, 37.42672302516287, 0.0017494759136240283},
    {353.93368747178465, 36.961868473318994, 0.0016099801972110474},
    {131.34934198189134, 36.6632897027887, 0.0017873100341239396},
    {269.09996862198886, 36.61329514938967, 0.0015064205944723202},
    {46.48535398797385, 36.597032750466646, 0.0015247689165804237},
    {184.04523449494317, 36.429540896729485, 0.0015389098035442912},
    {321.7749983901695, 36.24934716687374, 0.0017235026437738168},
    {99.49944695884427, 36.07112190826721, 0.0017257466863003612},
    {237.03468784694303, 35.69285958734368, 0.001537510969337366},
    {14.737028789020295, 35.33840316631032, 0.001541515447596621},
    {152.39522978867515, 35.02753602667588, 0.0015427167073723668},
    {289.692946255638, 34.83448479932819, 0.0016765839726273371},
    {67.05470926784983, 34.53264504952112, 0.0016929606607593878},
    {204.46670996000918, 34.38430838938719, 0.0017739059123154086},
    {341.93600166615005, 34.12355225361102, 0.0015224381470221758},
    {119.38328484772302, 33.95299617385809, 0.001752364261717592},
    {257.01893614422943, 33.745939723978715, 0.0015285402544125198},
    {34.715631317997214, 33.80073405113929, 0.001604031089080454},
    {172.30289112225344, 33.58978863539527, 0.0015324462310418324},
    {309.86223535744887, 33.37445886106497, 0.0016866398907687211},
    {87.62896581570605, 33.05343000789341, 0.0016939216196628537},
    {225.05327650824097, 32.78059335699121, 0.001402420255131849},
    {2.446039329204365, 32.429950701294175, 0.0015504750652538986},
    {139.90641177916163, 32.211541193550204, 0.0014084297195667036},
    {277.55502148109457, 32.03876138443073, 0.0017406565472393967},
    {54.82128372543516, 31.74254044751042, 0.0017721449600620642},
    {192.41652890062915, 31.626797366314577, 0.0017380464064346399},
    {330.0619613053318, 31.465433858563074, 0.0014413957907697887},
    {107.72472115858861, 31.284842177123625, 0.0015715863243070337},
    {245.28146870661774, 30.959553305290523, 0.0016831910838183749},
    {23.02204685992575, 30.815054484378614, 0.0017318877764646305},
    {160.633024631725, 30.55772390210412, 0.001608481330637849},
    {297.9595042136313, 30.391391355100073, 0.0015926483967197377},
    {75.35353387966178, 30.19029421164935, 0.0015590743737711808},
    {212.7202405750628, 29.959391643888026, 0.0013716319581493625},
    {350.1147362093012, 29.543312376462577, 0.0016508788837105465},
    {127.53097404297033, 29.29611310087228, 0.0013840524826101454},
    {265.1698309171625, 29.231834304483648, 0.0017250743574330387},
    {42.71142526493176, 29.101916560765158, 0.00175245470681262},
    {180.28609882919056, 28.92896165410188, 0.0017201581850447131},
    {317.8226549714227, 28.79055333337033, 0.0014663161812710612},
    {95.52449479003188, 28.564257853509776, 0.0014513649499322632},
    {232.93735316187488, 28.287475016003253, 0.0018730591859763797},
    {10.42088366206554, 28.06489484528485, 0.0017440401068879751},
    {147.87663624688219, 27.84837885835822, 0.0017611857912801468},
    {285.4344715178135, 27.54858788137284, 0.001480273642764593},
    {62.80446116789744, 27.308626745923394, 0.0013863445127088058},
    {200.34054972178384, 27.1035786298925, 0.0014012286591272018},
    {337.86375798683906, 26.823585488408142, 0.0017631809879815705},
    {115.46428190900426, 26.58223511153644, 0.0015413439692954882},
    {253.07449809102286, 26.383178603680154, 0.0015605378198894713},
    {30.788307189060895, 26.341226408298255, 0.0015489751323889405},
    {168.3657282189697, 26.1229392327434, 0.0016523391095309775},
    {305.74291623339144, 26.008871808235245, 0.0015586510426285052},
    {83.15027628968723, 25.850890556728146, 0.0015756068326442294},
    {220.55075564040544, 25.636725829804668, 0.0019461087052256815},
    {358.03266714302026, 25.31381317032799, 0.0016787310500087685},
    {135.49957063926936, 25.120680507173276, 0.0018244378520988714},
    {273.0309037884587, 24.98903993707756, 0.0014901125239453349},
    {50.460601032184414, 24.682455784537247, 0.0012915624734512886},
    {188.03000246429949, 24.56418842794517, 0.0014729474672095409},
    {325.5225604533829, 24.441082935943342, 0.001795613775378201},
    {103.14523527911915, 24.239201078575626, 0.0017232544041949718},
    {240.58260025625682, 24.00572148465839, 0.0012869617524758977},
    {18.14088994011607, 23.91583152595468, 0.0013995178343936467},
    {155.61979132374893, 23.729873467089437, 0.0015527622750391857},
    {293.18581636366184, 23.4567139084097, 0.0016532449483059194},
    {70.6199644981741, 23.25227893675604, 0.0018209986932352393},
    {208.1154922428004, 22.984368831089625, 0.0018631634231703368},
    {345.5738205824997, 22.604935138423148, 0.0015409098306099166},
    {123.13076147039219, 22.313482026459763, 0.0017121363354580625},
    {260.7569354993494, 22.198650253833957, 0.0016426393959830682},
    {38.31723525032225, 22.02451273040831, 0.0014459474697087493},
    {175.87551834837575, 21.843824737260967, 0.0015259933847798846},
    {313.282833099251, 21.759543607104955, 0.0017097138315547448},
    {90.72135156598377, 21.648709883840006, 0.001707722078328021},
    {228.1305717408201, 21.408250806488955, 0.0011703703697407654},
    {5.669982791796075, 21.165991174120382, 0.0013756168138515145},
    {143.1324065698761, 20.95743479002349, 0.0014853778256465043},
    {280.5784244236656, 20.73751077342354, 0.0016616310995678566},
    {58.053020515303864, 20.480126986239988, 0.0020282080263826813},
    {195.55096896679942, 20.29955927694937, 0.0017249860650897818},
    {332.96955249402885, 20.097166171322797, 0.001470839263919398},
    {110.51775071833778, 19.881582360054924, 0.0015226326697107186},
    {248.01769334446502, 19.741075498094002, 0.0019259870047826173},
    {25.59677224439594, 19.718235054115958, 0.0016931755324122826},
    {163.09134993173814, 19.544776447024876, 0.0015832193793109892},
    {300.6614227753248, 19.314798616448996, 0.001621690978950252},
    {78.12988274402706, 19.13185143960753, 0.0014358467799674777},
    {215.6397464021246, 18.884210987423494, 0.0012720313906741797},
    {353.156648753078, 18.578008681624418, 0.0014282437790609683},
    {130.727511553821, 18.334778231204783, 0.001565396449383526},
    {268.2914596150097, 18.17163147173585, 0.0014712271948641126},
    {45.761381357573875, 17.892146846023177, 0.0020026277562475493},
    {183.3160080244338, 17.756982575293748, 0.0015878319848798032},
    {320.72986124231, 17.665812337423045, 0.0014707922390499346},
    {98.17427649321331, 17.547814319685273, 0.0014988175236858845},
    {235.61923280615034, 17.331117112514992, 0.002075428616879583},
    {13.200604586164674, 17.19083201904752, 0.001904964405299035},
    {150.68118055406134, 17.01166568560992, 0.001530217858366867},
    {288.1372965001118, 16.812016192128176, 0.0016601682046438523},
    {65.62814479381983, 16.58883753281434, 0.0011229355280845603},
    {203.0914451054231, 16.3657815783613, 0.0015249991918972335},
    {340.48249357589526, 16.087856225286835, 0.001497926512826324},
    {117.98303111685887, 15.844997145421024, 0.0017007553834511874},
    {255.50850338834272, 15.75371456010825, 0.0012054570856986882},
    {32.99589336962685, 15.62128836699646, 0.0017759668516212483},
    {170.50229193433384, 15.460391272515434, 0.0015857437474438522},
    {308.05390314621314, 15.267859330811884, 0.001517240199366165},
    {85.54734023890809, 15.117241077017843, 0.0017081900095765527},
    {223.0406163302396, 14.852071628978083, 0.001953326202092143},
    {0.5878057330958297, 14.601641347238074, 0.0019899442396653197},
    {138.12726169994696, 14.350102979060342, 0.001402151304248241},
    {275.6286839451428, 14.112183332857562, 0.0018359354722313804},
    {53.11396150542524, 13.859658322032978, 0.0009763009129001419},
    {190.61608453678443, 13.67804809495033, 0.0017219221441857374},
    {328.00952595583067, 13.52150537645907, 0.001556892953365962},
    {105.45747788689752, 13.375047963800556, 0.0017041193628786046},
    {242.95587370965086, 13.227785808937245, 0.0010849776984349234},
    {20.544588592805344, 13.156200319571306, 0.0014304371935892817},
    {158.0331487296111, 12.991954346939638, 0.0017656962709748363},
    {295.50070936437385, 12.813585827093881, 0.0014351126796681467},
    {72.99964768597661, 12.618175496571773, 0.002065628705909029},
    {210.47630956300503, 12.405666040122428, 0.0016161970769532664},
    {347.9278567062832, 12.163266905321755, 0.0020258203202375693},
    {125.43780269372029, 11.950600173760643, 0.0012727384763313312},
    {262.9420315684221, 11.832590451036197, 0.002095849937514244},
    {40.38732423853554, 11.615656638789826, 0.001101029949566267},
    {177.9088956978025, 11.482150293994183, 0.0017678161578646204},
    {315.42971214112583, 11.314100151313657, 0.0016284210847672816},
    {92.92247580970383, 11.170492473656449, 0.0014771002000880664},
    {230.42347035062363, 10.928808688419556, 0.0012726018508815327},
    {7.99573503102063, 10.753372606494143, 0.001116984392621329},
    {145.5300234660917, 10.534403884482824, 0.0020548934123097657},
    {283.03050542884625, 10.309492166731916, 0.0011929044684102564},
    {60.52099281489847, 10.082547026774915, 0.002296180305134356},
    {197.99912577276402, 9.870202770133252, 0.0012817751997511982},
    {335.3913841370918, 9.650673467050185, 0.0019644342714519236},
    {112.83906610764711, 9.45843691541164, 0.0013506297377207399},
    {250.35678834297525, 9.35179217698737, 0.0021463032203849755},
    {27.871810984795825, 9.21096197087408, 0.0014420484727783744},
    {165.36331461733673, 9.056329046485999, 0.0014944640548564688},
    {302.8304564659853, 8.889687314881836, 0.001812007455078389},
    {80.33517428553927, 8.72142670779424, 0.0011578366259430862},
    {217.8042081779445, 8.486600870726573, 0.001661460688831749},
    {355.2912090532972, 8.27014643118358, 0.0009177219015914424},
    {132.78190558336223, 8.045308297925203, 0.002229795364847279},
    {270.2500134635755, 7.853323201193239, 0.000986344920430292},
    {47.711493680717325, 7.62278349257894, 0.0023043634784207954},
    {185.20511636821547, 7.455994725661897, 0.001210791127434155},
    {322.68593278355576, 7.269814833378069, 0.0018023372236156477},
    {100.17798599703673, 7.119060479641644, 0.0016537279970546778},
    {237.70424830619802, 6.937114329574766, 0.0018985907634731848},
    {15.288372942487175, 6.828681191935127, 0.0019052566515941098},
    {152.81498207664637, 6.634605517998241, 0.0010525783147919807},
    {290.30841476371415, 6.4273479511508755, 0.0021019857503730053},
    {67.80303712514025, 6.227136601839138, 0.0008731246051689019},
    {205.28648691179535, 6.019382235002574, 0.0020580863515324097},
    {342.7258094500389, 5.811625698887726, 0.0008569125205039151},
    {120.19935584462924, 5.623747390732359, 0.0021410188619049204},
    {257.7137867919063, 5.515162944899896, 0.001000813674513172},
    {35.19205230401734, 5.316647239087714, 0.002086419168790562},
    {172.69695295902633, 5.18611374964434, 0.0014837268542828637},
    {310.1666716200384, 5.0322841485642575, 0.0014720350800145766},
    {87.67276922317733, 4.879013089484203, 0.002044347425468571},
    {225.15306123417778, 4.649981411426739, 0.0014312675858178187},
    {2.6694601482343696, 4.477051164616916, 0.0023122223336483256},
    {140.16130811174858, 4.2671482673506995, 0.0007395052603994645},
    {277.63588579542517, 4.059081922651688, 0.0022900759268743446},
    {55.10970061123037, 3.836277491160109, 0.0008337913428380675},
    {192.59215444862477, 3.640426189129692, 0.0021862798060544066},
    {330.05209271930903, 3.4247838257288, 0.0010464704067889112},
    {107.53402377482499, 3.240773197762707, 0.0017525687635778907},
    {245.07158639684212, 3.104619308579014, 0.0013351996907793302},
    {22.60651195797108, 2.9580425562964123, 0.001623486951342523},
    {160.1190996029106, 2.777429793376448, 0.002002639723807766},
    {297.59233815388774, 2.5825032527497505, 0.0010901564543606386},
    {75.08333499163231, 2.4031414355093754, 0.002307468564830529},
    {212.5546958121248, 2.178055368381154, 0.0010298270774948038},
    {350.01752249740895, 1.979692934095618, 0.002531474743383866},
    {127.48688583632406, 1.7717124059567, 0.0007557574488986037},
    {264.9654254549437, 1.5992694019239815, 0.0022191542384546147},
    {42.435463688434965, 1.3742777545623752, 0.0009136918353364338},
    {179.92788160447893, 1.220694119283814, 0.001961311465802733},
    {317.3965126056453, 1.054979643474984, 0.0014676506590291976},
    {94.91280318374417, 0.9064015498814596, 0.0012797989683817688},
    {232.41783712876918, 0.7161312747450139, 0.001813683591267634},
    {9.967236224662377, 0.6026886378975724, 0.0011172924162286733},
    {147.46198367285925, 0.41445636146732323, 0.002421834900386856},
    {284.9364890651261, 0.2039267229620655, 0.0009116962732229936},
    {62.42238361180999, 1.4223255994228916e-12, 0.002386442041856713},
    {199.90827815849934, -0.20392672296754416, 0.000911696272923404},
    {337.3827835507576, -0.4144563614670621, 0.0024218349004217848},
    {114.87753099895178, -0.6026886378952435, 0.0011172924165640708},
    {252.42693009484682, -0.7161312747469883, 0.0018136835904889622},
    {29.93196403986956, -0.9064015498820439, 0.0012797989688218922},
    {167.44825461796643, -1.0549796434745715, 0.0014676506589462403},
    {304.9168856191259, -1.2206941192792646, 0.0019613114657688084},
    {82.40930353517443, -1.3742777545594214, 0.0009136918350326722},
    {219.87934176865627, -1.5992694019169686, 0.0022191542390613494},
    {357.3578813872849, -1.7717124059565499, 0.0007557574487056675},
    {134.82724472619955, -1.979692934095103, 0.002531474743209416},
    {272.29007141147576, -2.1780553683760706, 0.001029827078086126},
    {49.7614322319736, -2.4031414355116194, 0.0023074685645887655},
    {187.2524290697172, -2.5825032527469873, 0.0010901564543312578},
    {324.72566762070124, -2.7774297933783343, 0.0020026397237918703},
    {102.23825526564158, -2.9580425562991497, 0.0016234869517440164},
    {239.77318082677522, -3.1046193085828726, 0.0013351996900240193},
    {17.3107434487864, -3.2407731977643794, 0.0017525687639587365},
    {154.79267450430683, -3.4247838257323906, 0.0010464704067605975},
    {292.25261277499914, -3.6404261891377963, 0.0021862798058057808},
    {69.73506661238324, -3.8362774911660606, 0.0008337913427761874},
    {207.20888142819834, -4.05908192266039, 0.0022900759271815094},
    {344.6834591118644, -4.267148267353283, 0.0007395052603340135},
    {122.17530707537662, -4.477051164618421, 0.0023122223333488495},
    {259.6917059894363, -4.649981411428405, 0.0014312675865616013},
    {37.17199800043696, -4.879013089483631, 0.0020443474250831516},
    {174.67809560357225, -5.032284148563096, 0.0014720350801401929},
    {312.14781426457756, -5.1861137496387, 0.0014837268543327466},
    {89.65271491959119, -5.316647239084749, 0.002086419169108572},
    {227.1309804316925, -5.515162944891357, 0.001000813673926012},
    {4.645411378983101, -5.623747390728685, 0.0021410188621354587},
    {142.11895777357154, -5.811625698883495, 0.0008569125206366348},
    {279.558280311808, -6.019382234994598, 0.00205808635102592},
    {57.04173009847238, -6.227136601831642, 0.0008731246053337522},
    {194.53635245989332, -6.427347951145178, 0.0021019857504009296},
    {332.02978514696923, -6.634605517997224, 0.0010525783147659117},
    {109.55639428112909, -6.828681191933822, 0.001905256651252422},
    {247.1405189174217, -6.937114329579362, 0.001898590764188628},
    {24.666781226575715, -7.119060479641993, 0.0016537279966769595},
    {162.15883444006204, -7.269814833381805, 0.0018023372237189917},
    {299.63965085540985, -7.455994725670399, 0.0012107911276338958},
    {77.13327354290038, -7.6227834925812035, 0.002304363478518454},
    {214.5947537600501, -7.853323201201835, 0.0009863449201612182},
    {352.06286164025, -8.045308297926962, 0.0022297953649351517},
    {129.55355817031383, -8.270146431184694, 0.0009177219018642952},
    {267.0405590456679, -8.486600870728303, 0.0016614606881900063},
    {44.509592938070696, -8.72142670779955, 0.0011578366262268288},
    {182.0143107576232, -8.88968731488158, 0.0018120074549355554},
    {319.4814526062642, -9.056329046481595, 0.0014944640547794182},
    {96.97295623881016, -9.210961970873255, 0.0014420484725225467},
    {234.48797888062086, -9.35179217697843, 0.0021463032209061016},
    {12.005701115962841, -9.458436915412, 0.0013506297374582205},
    {149.4533830865159, -9.650673467048275, 0.0019644342713962615},
    {286.84564145083755, -9.870202770127682, 0.0012817752001261814},
    {64.32377440870722, -10.082547026776208, 0.002296180305039152},
    {201.81426179475847, -10.309492166729484, 0.0011929044684015526},
    {339.31474375752174, -10.534403884486244, 0.00205489341235258},
    {116.84903219259282, -10.753372606497326, 0.001116984392927701},
    {254.421296872997, -10.9288086884255, 0.001272601850247769},
    {31.92229141390988, -11.170492473655022, 0.0014771002003795433},
    {169.41505508249358, -11.314100151317538, 0.001628421084621831},
    {306.9358715258247, -11.4821502940028, 0.001767816157700341},
    {84.45744298508326, -11.61565663879274, 0.0011010299494660235},
    {221.90273565520565, -11.832590451045338, 0.002095849937764882},
    {359.4069645298943, -11.950600173758206, 0.0012727384761982668},
    {136.9169105173303, -12.163266905319743, 0.002025820320022374},
    {274.36845766060924, -12.40566604012092, 0.0016161970774416343},
    {51.845119537640706, -12.6181754965669, 0.0020656287057156126},
    {189.34405785923644, -12.813585827089906, 0.0014351126798172042},
    {326.8116184939918, -12.991954346930331, 0.001765696271049117},
    {104.30017863080334, -13.15620031956516, 0.0014304371937970415},
    {241.88889351394388, -13.227785808926168, 0.001084977697976053},
    {19.38728933671333, -13.375047963800222, 0.00170411936310975},
    {156.83524126777678, -13.521505376456213, 0.0015568929533471463},
    {294.2286826868169, -13.678048094943993, 0.0017219221439233},
    {71.73080571818295, -13.859658322029464, 0.0009763009129566621},
    {209.2160832784624, -14.112183332853213, 0.0018359354722121944},
    {346.7175055236674, -14.35010297906374, 0.0014021513041836224},
    {124.25696149051838, -14.601641347240903, 0.00198994423939838},
    {261.8041508933814, -14.852071628985305, 0.001953326202577656},
    {39.297426984700905, -15.11724107702309, 0.001708190009398172},
    {176.79086407740576, -15.26785933081835, 0.0015172401995207187},
    {314.34247528929257, -15.460391272527284, 0.0015857437475810545},
    {91.84887385399065, -15.621288367003055, 0.0017759668516785128},
    {229.33626383528602, -15.753714560119356, 0.0012054570854871046},
    {6.861736106752732, -15.844997145422038, 0.001700755383612456},
    {144.3622736477166, -16.087856225287396, 0.0014979265129540717},
    {281.7533221181896, -16.365781578362224, 0.001524999191577255},
    {59.21662242979121, -16.58883753281894, 0.0011229355282061399},
    {196.7074707234957, -16.812016192127825, 0.0016601682044908165},
    {334.163586669538, -17.01166568560487, 0.0015302178583057116},
    {111.64416263744033, -17.190832019045757, 0.0019049644051042152},
    {249.22553441744336, -17.331117112503936, 0.0020754286172641307},
    {26.670490730399187, -17.547814319682743, 0.0014988175235437773},
    {164.1149059812974, -17.665812337418956, 0.0014707922391072042},
    {301.528759199168, -17.756982575285733, 0.0015878319850654776},
    {79.08338586603415, -17.89214684601871, 0.002002627756201589},
    {216.55330760859516, -18.17163147173034, 0.0014712271948634063},
    {354.1172556697961, -18.334778231204204, 0.0015653964494895022},
    {131.68811847053846, -18.57800868162427, 0.0014282437792587609},
    {269.20502082149835, -18.88421098742762, 0.001272031390352511},
    {46.71488447958924, -19.131851439602034, 0.001435846780070926},
    {184.18334444829682, -19.314798616452098, 0.001621690978795927},
    {321.7534172918915, -19.544776447032376, 0.001583219379219045},
    {99.24799497922531, -19.718235054117823, 0.001693175532361634},
    {236.82707387916483, -19.741075498105022, 0.0019259870049761622},
    {14.327016505274148, -19.88158236005532, 0.0015226326695866705},
    {151.87521472958358, -20.097166171323224, 0.0014708392638634368},
    {289.29379825681406, -20.299559276950248, 0.0017249860652877546},
    {66.79174670831047, -20.480126986240357, 0.002028208026303015},
    {204.26634279994354, -20.737510773421498, 0.0016616310997113293},
    {341.7123606537244, -20.957434790017913, 0.001485377825713097},
    {119.17478443180977, -21.165991174117732, 0.0013756168140184237},
    {256.7141954827742, -21.408250806479042, 0.0011703703694820272},
    {34.123415657624314, -21.648709883844496, 0.001707722078382166},
    {171.56193412435474, -21.759543607103154, 0.0017097138314889682},
    {308.9692488752243, -21.843824737256227, 0.0015259933846592524},
    {86.52753197328357, -22.024512730407185, 0.0014459474697683457},
    {224.08783172425413, -22.198650253829484, 0.0016426393959919486},
    {1.7140057532218744, -22.313482026462452, 0.001712136335337495},
    {139.27094664111473, -22.60493513842513, 0.001540909830498926},
    {276.7292749808197, -22.984368831095303, 0.0018631634233459325},
    {54.22480272543578, -23.25227893675956, 0.0018209986931821281},
    {191.6589508599569, -23.456713908416216, 0.0016532449484542044},
    {329.22497589987694, -23.729873467100532, 0.0015527622750943948},
    {106.70387728350171, -23.91583152596081, 0.0013995178344688795},
    {244.2621669673719, -24.005721484669095, 0.0012869617522995765},
    {21.699531944493934, -24.239201078573885, 0.00172325440424721},
    {159.32220677023045, -24.441082935942983, 0.0017956137753993942},
    {296.81476475931566, -24.564188427945126, 0.0014729474670730077},
    {74.38416619143037, -24.68245578453706, 0.0012915624735185607},
    {211.813863435152, -24.989039937075354, 0.0014901125238500406},
    {349.34519658433516, -25.120680507165094, 0.001824437852001979},
    {126.8121000805882, -25.313813170323158, 0.0016787310498939548},
    {264.2940115831929, -25.636725829793907, 0.0019461087053678945},
    {41.69449093392773, -25.850890556722835, 0.0015756068326272222},
    {179.1018509902165, -26.00887180823066, 0.0015586510427000177},
    {316.4790390046339, -26.122939232735643, 0.001652339109585571},
    {94.05646003454811, -26.341226408293327, 0.0015489751323572594},
    {231.7702691325809, -26.383178603675898, 0.0015605378198541233},
    {9.380485314609066, -26.582235111537997, 0.0015413439693717091},
    {146.9810092367749, -26.82358548840951, 0.0017631809880342799},
    {284.5042175018344, -27.10357862989646, 0.0014012286590382183},
    {62.04030605571538, -27.30862674592288, 0.0013863445127336687},
    {199.41029570580577, -27.54858788137648, 0.0014802736426433097},
    {336.9681309767432, -27.848378858366292, 0.0017611857912339993},
    {114.42388356155271, -28.064894845288855, 0.0017440401068141895},
    {251.90741406175192, -28.287475016011502, 0.0018730591860859713},
    {29.320272433577518, -28.564257853513592, 0.0014513649499335785},
    {167.0221122521896, -28.790553333371754, 0.0014663161812643083},
    {304.5586683944236, -28.928961654104004, 0.0017201581851314482},
    {82.1333419586814, -29.101916560767325, 0.0017524547067353595},
    {219.6749363064487, -29.231834304482966, 0.001725074357497672},
    {357.31379318063443, -29.296113100869174, 0.0013840524827154227},
    {134.73003101430697, -29.543312376460666, 0.0016508788837627153},
    {272.12452664853697, -29.95939164388212, 0.00137163195809784},
    {49.491233343947705, -30.19029421165177, 0.0015590743737687533},
    {186.8852630099747, -30.391391355099355, 0.0015926483966470838},
    {324.21174259187694, -30.557723902101568, 0.0016084813306265766},
    {101.82272036368082, -30.81505448437817, 0.0017318877764495042},
    {239.56329851698626, -30.959553305287816, 0.0016831910838785553},
    {17.120046065024322, -31.284842177123327, 0.0015715863242917456},
    {154.78280591828178, -31.465433858563348, 0.0014413957907366427},
    {292.4282383229871, -31.62679736631613, 0.001738046406500479},
    {70.02348349817765, -31.742540447509537, 0.0017721449600400603},
    {207.28974574252348, -32.03876138443264, 0.0017406565473151864},
    {344.93835544446324, -32.21154119355318, 0.0014084297196355333},
    {122.39872789441401, -32.429950701294985, 0.0015504750653016098},
    {259.79149071538393, -32.78059335699488, 0.0014024202550811343},
    {37.215801407908366, -33.05343000788967, 0.0016939216196568603},
    {174.98253186616463, -33.374458861064134, 0.0016866398907581545},
    {312.5418761013619, -33.589788635394505, 0.0015324462310033669},
    {90.12913590561719, -33.800734051138384, 0.0016040310891334683},
    {227.82583107938262, -33.745939723978566, 0.0015285402543877683},
    {5.461482375885444, -33.95299617385658, 0.0017523642616486107},
    {142.9087655574599, -34.123552253610065, 0.0015224381470035331},
    {280.37805726359466, -34.384308389383676, 0.0017739059123259018},
    {57.79005795576231, -34.53264504952036, 0.0016929606607743283},
    {195.1518209679703, -34.834484799326596, 0.0016765839726812616},
    {332.44953743493, -35.02753602667359, 0.0015427167073709081},
    {110.10773843458831, -35.33840316630932, 0.0015415154476267866},
    {247.8100793766633, -35.692859587341786, 0.0015375109692998775},
    {25.345320264766624, -36.07112190826972, 0.001725746686279408},
    {163.06976883344285, -36.24934716687482, 0.0017235026437982927},
    {300.7995327286703, -36.429540896731204, 0.001538909803496434},
    {78.35941323563807, -36.5970327504675, 0.00152476891662648},
    {215.74479860162702, -36.6132951493912, 0.001506420594415057},
    {353.4954252417286, -36.66328970279195, 0.0017873100340435925},
    {130.91107975183098, -36.96186847332024, 0.0016099801972010931},
    {268.1680097484464, -37.42672302516606, 0.001749475913627641},
    {45.57499744406238, -37.71268242962648, 0.0016002544517553336},
    {183.47107187648461, -38.11826441177134, 0.0015813478150660584},
    {321.0660634077566, -38.43585056438055, 0.0016617710099234048},
    {98.66284299015001, -38.678757188155615, 0.0015581689135878325},
    {236.37394917653128, -38.75804147289897, 0.001640362169067045},
    {13.958779159258459, -39.14182394885053, 0.0015664714867936582},
    {151.4706678478844, -39.21188130446237, 0.0017165498452985201},
    {289.06330870714964, -39.27037794801176, 0.001523520464068719},
    {66.53915545957346, -39.32258312672848, 0.0015459926286326342},
    {203.84818468306256, -39.73389155636061, 0.0015382180813264458},
    {341.20773522731156, -39.76595236190884, 0.00171186688149567},
    {118.94858050593716, -40.119497586638005, 0.0016491657091662175},
    {256.5382634639573, -40.68424120056828, 0.0016805059747643228},
    {34.01571358954108, -41.056009931451655, 0.0015316908180718902},
    {171.80584239482818, -41.32012615262628, 0.001553069238960905},
    {309.67535944850215, -41.62784026716647, 0.0016646947551583156},
    {87.19825524418071, -41.83132189452475, 0.0016257435763869768},
    {224.74815225915327, -41.59944378787377, 0.0016905039087752292},
    {2.4364109146932074, -41.8442252721007, 0.0014731065796061678},
    {139.90726334536024, -42.04320798529321, 0.0016324996874779855},
    {277.09251080963395, -42.23469387464314, 0.001504761093698122},
    {54.55592160853237, -42.40466671595701, 0.0015815981524432785},
    {192.6010953084274, -43.006787570369994, 0.0015971957778849945},
    {330.2544107413822, -43.37122892178691, 0.0016023615515606087},
    {107.84213093591624, -43.639452234865225, 0.00162841945322449},
    {245.4121161208707, -44.03908599459846, 0.0016007623022481466},
    {22.83817724851904, -44.50142915191374, 0.0015350386453327125},
    {160.41293067604283, -44.542563792701145, 0.001519661843420082},
    {298.27601947516075, -44.61854332185448, 0.0016369617113488658},
    {75.74994215992882, -44.77137509805672, 0.00164846224953227},
    {213.1784423078116, -44.75788435254507, 0.0016339684211515797},
    {350.564010320316, -44.604389869490404, 0.0014765972175834136},
    {128.4071193856898, -45.108280751427806, 0.0015427962100822415},
    {265.6518772686609, -45.837894672021505, 0.0015324638567221472},
    {43.087618955023096, -46.19325395298202, 0.0016089089863778297},
    {180.97455660445445, -46.515918537590224, 0.0016339360640581031},
    {318.9673851504888, -47.00859918301618, 0.001534284764898758},
    {96.35621744273075, -47.225564623078235, 0.0016350966733095296},
    {233.84186140254658, -47.19300070906151, 0.0015225221611356247},
    {11.207561942494449, -47.6879044324191, 0.0016995332997749642},
    {148.76337212279276, -47.725896165713934, 0.0015028834701366137},
    {286.31567792262166, -47.511314957301074, 0.0016204629463684108},
    {63.98316333753537, -47.56804753863582, 0.001558806176579973},
    {202.3580686033586, -48.500639990712834, 0.0016032669334705809},
    {340.1957753426667, -48.67462076470828, 0.0015021881619158273},
    {117.82110943988846, -48.97256717805864, 0.0015610569830920614},
    {254.52134005619772, -49.742928912516184, 0.0015740465710156466},
    {31.812057039102314, -50.18972384079237, 0.001691193969554212},
    {169.29560930909625, -50.28931429904639, 0.0016332136142793378},
    {307.3668656501118, -50.572570674916186, 0.0015848565810257667},
    {84.48286263146109, -50.794189570752685, 0.0015647198338920153},
    {222.02516785695096, -50.347926565275074, 0.0014845065891252813},
    {358.71478574363704, -50.38726868306382, 0.0016154926376760578},
    {136.8562201976739, -50.94089404881916, 0.0015917005684965544},
    {275.0533531816288, -51.27224649313509, 0.0016101669592881991},
    {52.84836515929851, -51.407389232504414, 0.0015845368579128884},
    {190.96831040804807, -51.88151434140045, 0.0015289796698327055},
    {329.12318510799753, -52.447426615142284, 0.0016159855257871672},
    {106.58046105596813, -52.644027181855144, 0.0015226811060829134},
    {242.43914458961032, -53.27754763713961, 0.0016257074274881901},
    {19.64445920824999, -53.91249307554762, 0.0015723350310489765},
    {157.00154870564955, -53.90889576064663, 0.001688088582666245},
    {294.58435070280586, -53.53995016723303, 0.0015241693624641638},
    {71.64142036947179, -53.92502516816183, 0.0015660506746207037},
    {210.69877387024073, -54.85938728690936, 0.0016019187759051476},
    {347.4987073020648, -55.42807055614762, 0.0017612921270779198},
    {125.38923267349894, -55.68809372584989, 0.001651545587533565},
    {263.664764716278, -55.84295381573474, 0.001644196482846745},
    {41.39420858218129, -56.05934943056497, 0.0015233487499732605},
    {179.08283939616805, -56.005187794361426, 0.0015659608590119398},
    {317.03621144144324, -56.637312226266815, 0.0016491797111045313},
    {94.32214887415873, -56.68460025795617, 0.0015972225198147931},
    {229.34408037860888, -57.035731257312015, 0.0017272961665621349},
    {5.657251784012546, -57.05947710365578, 0.0015071835574614481},
    {143.78950834394402, -57.85824966535219, 0.0016329304151874282},
    {282.28705634843374, -58.29554818365674, 0.001620930417403398},
    {59.17304181511431, -58.720864503377136, 0.0016622644183815502},
    {197.2890462812077, -59.25362190121572, 0.0016952314350635405},
    {333.79036866484944, -60.289666201684284, 0.0015813417305916614},
    {111.74780596297038, -60.34585960874913, 0.0017133864778585517},
    {250.11512553194498, -60.118906890223734, 0.001611348369995234},
    {27.915462179444848, -60.62366004581131, 0.0016320071377959378},
    {165.26351956537655, -60.582267535630606, 0.0015359250912889105},
    {302.2371667912954, -60.331667938411556, 0.0016102671992871357},
    {79.57960880437919, -60.65827945888419, 0.0016656420000311701},
    {215.30089615200262, -62.66220012145129, 0.0016397405653717256},
    {351.8838554673557, -63.25490952778798, 0.0015334595776414865},
    {130.2810569444984, -63.54893252973997, 0.0015711749662803314},
    {268.9748722182161, -63.759173976369645, 0.0015727476387687508},
    {45.38470224100401, -64.31587778057494, 0.0016849373657277342},
    {181.83853698344393, -64.19283413636217, 0.0016160908421309311},
    {316.84870843271614, -65.18697318519764, 0.0015115865240455174},
    {94.96473047196976, -65.10236389047026, 0.001524662948741207},
    {234.1672672310851, -64.69509166273022, 0.0014432498695603085},
    {11.499921147846024, -64.38990305644668, 0.001720850783619789},
    {150.9630950090571, -65.3521085769503, 0.0015675347645716607},
    {289.8369582146837, -66.08486483974119, 0.0016525084339597002},
    {66.76224946775847, -66.34999851367623, 0.001482402651361221},
    {199.35818606179075, -67.98176801937429, 0.0014539190178195687},
    {335.3554558440403, -68.96231917310011, 0.0017158317212638686},
    {113.44817108920525, -68.95050015205808, 0.0015312031075630562},
    {252.11876949946586, -68.76693481828624, 0.0016806406189985167},
    {27.543393491845194, -69.76218533094912, 0.0014370787325263643},
    {169.05264079125757, -70.69394233578528, 0.0017054947399248194},
    {306.20560809784246, -72.52332115306665, 0.00165727940322901},
    {83.77719110735732, -72.28696845605843, 0.0017583972378245006},
    {221.82751602950142, -71.73166709819084, 0.0016976051363112377},
    {359.51123716601603, -71.73834803466939, 0.0015064255098419452},
    {137.91842753775916, -72.01881572649096, 0.0016391337089411912},
    {275.6326036506246, -72.60375452082454, 0.0014989749886300172},
    {51.835046119782014, -72.84395742964308, 0.0016146379646257006},
    {194.7455922508533, -76.11184046218297, 0.0016810030436499315},
    {333.5259781954694, -77.38645873012189, 0.0015307630312654838},
    {110.73723878208116, -77.22247802914892, 0.001619103580764867},
    {245.3810086920361, -76.84559610528582, 0.0015022642934897671},
    {20.001350684703752, -78.22860027370461, 0.0018117735566714076},
    {157.78040523821159, -78.61237760232653, 0.0014679834991164144},
    {287.8119000599316, -80.55573209990455, 0.0017150233250230707},
    {66.23133595155518, -80.25878227872268, 0.0014423011569417873},
    {219.076577627727, -83.58405050034995, 0.001620397037167963},
    {348.53873387730675, -85.63414131351591, 0.0015104346751255435},
    {123.70380951441967, -85.55507701590722, 0.0016317363926430187},
};
static const double kFliege900[][3] = {
    {359.1402078412632, 85.97751585819893, 0.0010702104354558943},
    {133.12724947985717, 86.53638471094177, 0.0011203106465647347},
    {265.23522990380957, 84.82165629546785, 0.0010942157466986482},
    {58.34963532146233, 81.94570911584326, 0.0010825066869696843},
    {196.5878701433862, 82.22826209786864, 0.0011131578815733506},
    {325.7470115576555, 80.27146291967377, 0.0010863578448726777},
    {104.16012842718368, 80.07832863375818, 0.0010975810981315684},
    {239.479785535356, 79.11251521628358, 0.0011205896447590044},
    {13.117556088204422, 79.24773872223984, 0.0011102218967447204},
    {149.06239010476983, 79.706113253554, 0.0011225684646280244},
    {288.4071327145857, 78.59164962482663, 0.001152054476939576},
    {72.91492667791438, 75.69793102945454, 0.0011305981535178115},
    {209.11857424487354, 75.55055633233678, 0.0010863877847134263},
    {346.3590579504323, 74.95323362369588, 0.0011123673711657624},
    {124.47730373171349, 74.57094559898671, 0.0011353197057356204},
    {261.9307249089466, 74.54060700409894, 0.0011316445121396358},
    {41.039857789326064, 75.44233246323918, 0.0011438021731684778},
    {178.04352993237777, 75.81720530059174, 0.001121469647456281},
    {315.17208452312656, 73.8127677181908, 0.0011625709776524036},
    {97.57608934013061, 73.027005066012, 0.0011264248976471897},
    {233.28100311506412, 72.38978348532696, 0.0010800682906695778},
    {11.549223364162511, 72.44593684056781, 0.0010942535861700722},
    {149.85419739303705, 72.76031196222377, 0.001067450460537384},
    {285.7613211671064, 71.89902262301898, 0.0010793035098250255},
    {57.4279565810312, 70.31189525569206, 0.0010845499249072614},
    {193.97543348995586, 70.24349300817053, 0.0011448788218880479},
    {333.69752537173446, 69.36268962920239, 0.001118774455868529},
    {113.08607928385577, 68.23688447735809, 0.0010451674863839878},
    {250.20764140663573, 68.4229512520515, 0.0010942103273603155},
    {30.670368017207327, 69.40543271529383, 0.0011219778892785394},
    {169.02901961184776, 69.49026916430816, 0.0011510532077349458},
    {302.6222204859112, 68.37667898896301, 0.001096527389510976},
    {79.23789981381849, 68.77966096460929, 0.0010543730904926337},
    {215.70024491885997, 68.47070672765845, 0.001121974194296714},
    {354.6996214444876, 68.10537634799404, 0.0010933425801548287},
    {133.2262608131697, 67.9591801223118, 0.0011303365189359747},
    {269.8023129092144, 67.51112210372897, 0.0010960418297986268},
    {45.62746571082883, 65.29659383060782, 0.001124773744259434},
    {183.01271535888344, 64.96530760719973, 0.001049560976976175},
    {319.4135315568008, 65.57097021456664, 0.0010941259214125993},
    {96.43096552890549, 65.52439886569164, 0.0011523625590622727},
    {234.105358185478, 65.14605323734244, 0.0011401304605890617},
    {13.683406383874678, 65.45005598592884, 0.0011320522383482144},
    {151.7514790411296, 65.68290053278379, 0.001139149276481625},
    {287.52725682967593, 64.46946840615493, 0.0011431984529891419},
    {66.07358848184515, 64.09232902555843, 0.0012038266065858196},
    {202.85023369187815, 63.926794152178715, 0.0011288498430174734},
    {342.1172981155926, 63.259433192427736, 0.0011185214518850412},
    {121.339759721048, 62.45701678713258, 0.0011468222645857628},
    {257.31644201078717, 62.38596241597571, 0.0011464045623532189},
    {30.724794532740255, 62.41465799825466, 0.0010673191700699977},
    {167.95563570523336, 62.386432022998385, 0.0010857940160008928},
    {306.18172950069834, 61.65048346526566, 0.0010732661922297927},
    {83.29230740593773, 61.79437986158827, 0.0011132138096806097},
    {220.886409239816, 61.72135806550232, 0.001089681629736243},
    {0.36290830184107836, 61.62405062898499, 0.0011689776568914044},
    {138.66312794611048, 61.462485505814016, 0.0011183226986140697},
    {274.50902226887763, 60.86542229766517, 0.0011600803325807092},
    {54.582933139386654, 59.87964016711032, 0.0010507961845553212},
    {191.76905202853447, 59.54821010712161, 0.0011351741817651356},
    {328.88605107596277, 60.31312949184433, 0.0011280925784212885},
    {106.78277399020676, 60.46014786898003, 0.0011259499856909362},
    {243.75875582369684, 59.94377971675579, 0.0010923071572425391},
    {18.805506229284372, 58.992077593055946, 0.0011155417111837825},
    {155.90145174852378, 58.998316299664076, 0.0010887188252758084},
    {294.5620346778436, 58.413157545466724, 0.001111227253490846},
    {72.41097716175307, 57.84999455703959, 0.0010354610228448678},
    {210.03689077829017, 57.887989390078985, 0.0011194186031407987},
    {349.5101408647461, 57.53247547869214, 0.0010820839558560197},
    {128.4226455307734, 56.825794983994115, 0.0010647619802625144},
    {264.1654618009929, 56.61677065692019, 0.0009940983902194443},
    {41.43969972526624, 57.702789623441305, 0.0011434372888154763},
    {178.60196389486958, 57.52128515593551, 0.001137216146612984},
    {316.74180785520093, 57.25936290127578, 0.0011258322245923658},
    {94.30876865940958, 57.45762940884724, 0.001068721099080722},
    {231.45313175911366, 57.08473923160689, 0.0011213557454517987},
    {7.861291686969277, 55.978869481522594, 0.0010534488342652693},
    {145.33193024745614, 55.59909466376364, 0.0011398274380924763},
    {283.3798425100968, 55.74842944785282, 0.0010672193538236948},
    {62.12042964378798, 54.4172965968447, 0.0011195223288394574},
    {199.80604571428134, 54.37824068752701, 0.00103158197360548},
    {337.55304579814793, 55.213737311783284, 0.0011075955375248394},
    {115.44857686524638, 55.269345516083185, 0.0010773543787079669},
    {252.32839187911637, 54.66300370592921, 0.0011380079026004407},
    {29.688772004047557, 54.776338327490556, 0.001107702893166659},
    {166.96969834110666, 54.751044133574744, 0.001142831330192348},
    {305.2142159553416, 54.069763489316436, 0.0010970769887026094},
    {83.17212013774993, 53.985379057727414, 0.0011496393283180327},
    {220.50640920775356, 53.770820643339945, 0.0010848719438976916},
    {357.96304899407073, 52.62533204620282, 0.0011002092648880308},
    {136.15126289116031, 51.743932904296614, 0.0011012450098023313},
    {273.34121734636096, 52.30408473143345, 0.0011338740944796019},
    {50.51809950912886, 52.64744109553312, 0.0011050287302276937},
    {187.92243046682393, 52.481839638686765, 0.001065301301503568},
    {326.05731004599977, 52.65814086388357, 0.001066420866939173},
    {103.68213346946813, 52.878426444209985, 0.0011569588996883523},
    {240.78683807684357, 52.40537845065135, 0.0011015925026038177},
    {18.412810944428557, 51.71515208909057, 0.0010933446259715127},
    {156.05363347585032, 51.62266650800257, 0.0010585327918563967},
    {293.72924333289154, 51.24123100552128, 0.0011004319823882558},
    {72.22645408868316, 50.5191764749763, 0.0011049408748044685},
    {209.72889511308202, 50.44399880943366, 0.0011263486955784068},
    {346.5401851978696, 50.3911568290661, 0.0010950200528932735},
    {123.96017692181391, 50.21680544691485, 0.0011723689028986508},
    {261.81949698414974, 49.72873931167622, 0.001165798041275822},
    {39.28504323809012, 50.444897769129206, 0.0011044351318466026},
    {176.74597721875037, 50.31580501247978, 0.0010738800469121189},
    {314.92303042391154, 49.989408196767215, 0.0011313938720909267},
    {92.7612178852547, 49.993898658181344, 0.0011205343503727517},
    {230.08169086949806, 49.62681142950861, 0.0011441921050991415},
    {7.977572024945906, 48.71513039997108, 0.001156863068698341},
    {146.12061094783647, 48.238884493989104, 0.0010563502580759722},
    {283.1105816579502, 48.48549982746693, 0.0011209494685757919},
    {60.072181172029765, 47.848705742451266, 0.0010917597141178882},
    {197.3871256542785, 47.864154553654686, 0.0011748399893154566},
    {335.15520807539866, 48.255547921664125, 0.0011375800105198537},
    {112.5301251685704, 48.337470919193066, 0.0010973383507475018},
    {249.9412400753906, 47.92843318940005, 0.0010837244195203747},
    {27.903455203227995, 47.835248077486135, 0.0011192027150988618},
    {165.54071110818415, 47.730926983983125, 0.0011184562756469713},
    {303.0936554125184, 47.32049995470254, 0.0011293089582729873},
    {81.58676011631555, 47.00363549088306, 0.0011158587405211081},
    {218.9947579374898, 46.77351099938357, 0.0011374052597794687},
    {355.632932238031, 46.12356451848281, 0.001126349968383036},
    {132.56410516718648, 45.65026521585034, 0.0010196690774053306},
    {271.1567634844485, 45.75497396091816, 0.001077245658627495},
    {48.356824992213134, 46.04226572423446, 0.0011326661339252813},
    {185.8939608351196, 45.84797610926825, 0.0012189806927592596},
    {323.9232693990057, 45.844209768556496, 0.0011627249469048214},
    {101.60596966944941, 45.890100043870085, 0.0010979918348600806},
    {239.09185081599097, 45.47151383352478, 0.001120512921550574},
    {17.15718340833598, 44.83745971514015, 0.0011293595252633056},
    {155.15789479354393, 44.56506039643057, 0.0012445281021983832},
    {291.982144665387, 44.46188170221885, 0.0011570264611820199},
    {68.99504683899238, 44.24051027419279, 0.0011706280747549756},
    {206.24086441336266, 44.23220407649012, 0.001105265773603561},
    {343.69256967554537, 43.98457992074717, 0.0011351730141628217},
    {120.88791699887695, 43.84435589724723, 0.0010796649144373294},
    {258.2424895689858, 43.65194220905147, 0.0010864560184302451},
    {36.520338204021456, 43.96193452948897, 0.0011410673517936352},
    {174.08484436653978, 43.81642237124725, 0.001192630700611932},
    {311.65732309278843, 43.66252871315522, 0.0011137105024473272},
    {90.02566418017447, 43.37651507454237, 0.0010995242941861734},
    {227.3970017974388, 43.075797148950684, 0.0010695074229738078},
    {4.1485162610438575, 42.70169112678562, 0.0010832979238063793},
    {141.28894655260805, 42.600126621415185, 0.0012851844546402072},
    {279.68095745240987, 42.29482874905666, 0.0011462816153017304},
    {56.41967627937394, 41.84305062973245, 0.0011565485595079461},
    {194.16247212494386, 41.728046367938624, 0.0010063259588642885},
    {332.18858179633065, 41.87658075441937, 0.001090572577700334},
    {109.79244719870955, 41.82143695026392, 0.0011587970816785906},
    {247.3470170000731, 41.41435149626516, 0.001187868335812199},
    {25.552888843856266, 41.236477323707035, 0.0011357437330046971},
    {163.38727922838865, 40.98988476215921, 0.001002122270736585},
    {300.2689901711726, 40.90299907050424, 0.00109314682208237},
    {77.35817790141516, 41.046829983287914, 0.0010746096990731796},
    {214.51940406973438, 40.93906913897574, 0.001107119019140464},
    {351.7310701938545, 40.21557398522619, 0.0011165083662607307},
    {128.85735481587318, 39.78815868419999, 0.0012411876463449979},
    {266.3554724835735, 40.21754050854906, 0.0011699155477709394},
    {44.31294638046711, 40.10907317678016, 0.0011234338878089284},
    {181.80132524907376, 39.954871821060436, 0.0009797191310596254},
    {319.47586986423323, 40.03744417521582, 0.0010938278031571648},
    {97.73626748465104, 39.76042057135113, 0.0011601606236933755},
    {235.06752743009181, 39.46274725173313, 0.001174313843664761},
    {12.031130909865684, 39.37437957873012, 0.0011430147885041436},
    {149.34520720566408, 39.39694446689209, 0.0009237324599985939},
    {287.355822009413, 38.75339225208352, 0.0010592650475943679},
    {64.50431551057629, 38.57328711480949, 0.0010260481059649917},
    {202.2223654238264, 38.36632465052567, 0.0011751327550371569},
    {339.80861871229956, 38.04970702459771, 0.001115683417613254},
    {117.33987245181187, 37.802413403658726, 0.0011655613428912437},
    {255.06210522838455, 37.50737618332276, 0.0010843756530700263},
    {33.229519716686276, 37.66855734176036, 0.0010496265980830131},
    {170.94418931466518, 37.416343240694985, 0.0011071396783613337},
    {308.03084937753414, 37.52038395010569, 0.0011268611146482237},
    {85.11213895716483, 37.74552576353216, 0.0011889514950576806},
    {222.28509269348902, 37.598789987209074, 0.0011836351348807066},
    {359.71512262245835, 37.024114985147705, 0.0011409168079522152},
    {137.10323145420887, 36.84595346329471, 0.0008947640622087268},
    {274.3241032699819, 37.04687329415064, 0.0010898111273549105},
    {51.78450297482166, 36.38018875049079, 0.0010481106551824921},
    {189.30685195495445, 36.370946301671864, 0.0012806634865777224},
    {327.0024282514039, 36.57862782466157, 0.0011444844309413224},
    {105.05209912768429, 36.242106367219954, 0.0010898472547187252},
    {242.40802560423555, 35.99743523337984, 0.0010008619126256942},
    {19.73387070857631, 36.2136538381898, 0.0010459154554603091},
    {157.11801293779928, 36.18901873755874, 0.001215277018340085},
    {294.9795883172555, 35.61309405654107, 0.001131102635725799},
    {72.38465096102355, 35.57643124112441, 0.0011993363193016267},
    {210.0014369005548, 35.280414554679695, 0.0010917488851777777},
    {347.3246658135477, 34.64885441382785, 0.0010849748587047322},
    {124.75469129947825, 34.19728820323532, 0.0009111564911670097},
    {262.728044478085, 34.276389886464855, 0.001080393952799844},
    {40.49243023605863, 34.14719832449872, 0.0011295331348422815},
    {178.14022566250293, 33.90280938010739, 0.001208050561666891},
    {315.3979623470648, 34.162597087260245, 0.0011115538839881847},
    {92.52728266519229, 34.40675588324753, 0.0010305005322038385},
    {229.7553247981685, 34.2217068512238, 0.0010111589855866532},
    {7.356247046666676, 33.839568247628904, 0.0010530999029022402},
    {144.83332070174288, 33.779652593905745, 0.0013331248008740196},
    {281.90635886322167, 33.67729806583211, 0.0011428712064023151},
    {59.52105006305571, 33.300510132028435, 0.001229380104487979},
    {196.97967450050905, 33.23605663936239, 0.001030770299424689},
    {334.34334577957014, 33.09088632126458, 0.0011085465206366013},
    {112.13956460853616, 32.69124581445098, 0.000996445372587664},
    {249.62114170385365, 32.571081129314635, 0.0011567787850465605},
    {27.183591927567118, 32.91970980869354, 0.0011944453902728047},
    {164.61121819062416, 32.83680840665863, 0.0011769791240776161},
    {302.4336996806473, 32.476892275868465, 0.001093655963183029},
    {79.89891586749073, 32.477960863589104, 0.0009913625985796379},
    {217.45465851102918, 32.172883517245, 0.0010385676129287937},
    {354.88493194230614, 31.678298200474497, 0.0010693033362208647},
    {132.44897005887861, 31.42310931033669, 0.0013671318495653334},
    {270.1889957359042, 31.333188606064233, 0.0011062199281071097},
    {47.60008983034105, 30.77791137575161, 0.0011502379302639164},
    {185.26801340501723, 30.655528541674762, 0.0009135406278805054},
    {322.6163287463353, 30.966738668371566, 0.0010830045488205238},
    {99.78129017297753, 31.09200247553271, 0.001092056272925685},
    {237.10654512768133, 30.91476078778882, 0.0012248761039140841},
    {14.850334932859703, 30.842861984985703, 0.001205210161631242},
    {152.31433978375077, 30.79655740313921, 0.0010516044202448593},
    {289.533099148287, 30.59376451017018, 0.0011110349641144952},
    {67.18403719987177, 30.417281637633668, 0.0009879481949971278},
    {204.60212981934043, 30.255612234596146, 0.0011031136679348578},
    {341.82185517497794, 29.84170563438252, 0.0011023798989024188},
    {119.41085848469088, 29.379395810722873, 0.001341041641492449},
    {257.09303823090966, 29.464630169056754, 0.0010925230381704431},
    {34.497633801780424, 29.56793123737218, 0.0011028497686540978},
    {171.9651114006461, 29.438851984938946, 0.0009472499679648165},
    {309.7351863914341, 29.305519903945008, 0.0010878262205745056},
    {87.20816211018966, 29.34902823893139, 0.001171203383214127},
    {224.718132559081, 29.05598015905271, 0.0012195366774227822},
    {2.2670094518520907, 28.71098544321311, 0.0011853709073766717},
    {139.86017237787303, 28.560387920543967, 0.0009265932051794453},
    {277.3706281760446, 28.293524502731767, 0.0011109260948162906},
    {54.908367796082196, 27.94250117851907, 0.0009593721529677447},
    {192.48894715008876, 27.801836972689657, 0.001164231704656629},
    {329.6984899927899, 27.795271086699696, 0.0010983165824461712},
    {106.90752932639828, 27.7539436162748, 0.0012914656596004711},
    {244.36902996257, 27.660258930819175, 0.0010603272250225896},
    {22.12079384655541, 27.803863528576166, 0.0010398941266095553},
    {159.56841151299162, 27.740812348315533, 0.0009826112276793764},
    {296.9945259340279, 27.5710478797873, 0.0011025780824251421},
    {74.60578116864212, 27.474017439291266, 0.001224292740212238},
    {212.03818765493378, 27.26147265319594, 0.0012151632960159845},
    {349.4072630936609, 26.84568562775627, 0.001175875495381446},
    {127.03280884285758, 26.506111659374344, 0.0008742565642458124},
    {264.57584036156356, 26.50526547996402, 0.0011352414982474372},
    {41.81708344523352, 26.25710953020899, 0.0009887339448208254},
    {179.36010136005746, 26.148860161423062, 0.0012427817200570267},
    {317.0147630110582, 26.193416940973798, 0.0011233616689994327},
    {94.42828966939135, 26.225478181341725, 0.0012212048386251574},
    {231.93750871779616, 25.983063040646815, 0.0010154301567586704},
    {9.624984260484048, 25.840093016021367, 0.0010142327387128065},
    {147.1855585907547, 25.728215989777546, 0.0010486265392986264},
    {284.6352401469261, 25.483429903024952, 0.0010920783024871645},
    {62.24179059327136, 25.27129689579318, 0.0012401343608678453},
    {199.7361972513911, 25.093388391571967, 0.0011695098988024283},
    {336.89775934219415, 24.85045315311354, 0.0011394544783804724},
    {114.17550709359072, 24.628946469465394, 0.0008270719121433861},
    {251.7654867257621, 24.679071081384507, 0.0011130258316332726},
    {29.295811027848185, 24.729708410542795, 0.0010561190154877663},
    {166.74413810989972, 24.648044797110835, 0.0013152739628579878},
    {304.31703975536425, 24.542404846799574, 0.0011456397220953908},
    {81.8942426603142, 24.495989398294668, 0.0011476084856308403},
    {219.35221482980452, 24.25494932675151, 0.0009965146926339218},
    {356.8576158743372, 23.93250310739799, 0.0010092845173757387},
    {134.47536897698686, 23.711388972458717, 0.001132801547187131},
    {271.9037254428294, 23.544553054737765, 0.0010831679315610623},
    {49.33426566161847, 23.236585633996192, 0.0012689883061863226},
    {186.8478325827058, 23.11636522791973, 0.00114434977848604},
    {324.2499167572955, 23.10598453405, 0.0011266953737840996},
    {101.59746399674765, 23.07195046533047, 0.000840500579277948},
    {239.15677207437932, 22.923509961074288, 0.0011181366788176863},
    {16.882149092591845, 22.941574786873005, 0.0011168560982878794},
    {154.40607106909792, 22.839755152170543, 0.0013385972928831246},
    {291.89183100371696, 22.673009145899215, 0.0011327074669037506},
    {69.49706073363288, 22.530495287189957, 0.0010736554396602858},
    {206.95726824784683, 22.336604089486897, 0.0009780162585355811},
    {344.2399184378497, 22.06416774608996, 0.001018580278084596},
    {121.67618749249054, 21.819883177677912, 0.001242685201773548},
    {259.1820023383666, 21.82574135250984, 0.0010981883636436048},
    {36.51760701598327, 21.67924557616044, 0.0013088132043297801},
    {174.00530658306258, 21.610730795432843, 0.0010391576478816405},
    {311.61402693394314, 21.55466704482565, 0.0011130010348530538},
    {89.13107467275798, 21.514340581449662, 0.0008758934207583833},
    {226.635147625798, 21.28440662414038, 0.001161965109213037},
    {4.261543354432628, 21.104580005540715, 0.0011629880308404155},
    {141.84253270731, 20.94402290176869, 0.0013384083918312629},
    {279.2883799240642, 20.71505775685171, 0.0011090980491746546},
    {56.82969868373566, 20.494246591142833, 0.0010352862163757754},
    {194.30520379631295, 20.332659757293527, 0.0009663043078295713},
    {331.59061669948727, 20.170229139384144, 0.001041282148170847},
    {108.9110107646847, 20.052337898437237, 0.0013386744565046858},
    {246.5204450894156, 20.022463541836085, 0.001127461253706379},
    {24.095183709383427, 20.011361376643187, 0.0012703642566330886},
    {161.59642701088038, 19.912198428337774, 0.000922225486149837},
    {299.13350958467055, 19.821307439576117, 0.0010946740523324935},
    {76.72005008229256, 19.72659381960617, 0.0009341946942345721},
    {214.17886868318294, 19.521901814473374, 0.0012036865310584715},
    {351.60389680240314, 19.275957573602028, 0.0011966495071136483},
    {129.12561591277827, 19.06078537365606, 0.0012767706021221262},
    {266.54161286715515, 18.964681061802946, 0.001105450667322049},
    {43.93915702946096, 18.77435095739628, 0.0009618585104491522},
    {181.42275496158788, 18.674627515660365, 0.000990370851951156},
    {318.9046606101844, 18.583315215716617, 0.0010625768602615193},
    {96.35123065659286, 18.51331300321048, 0.001396928631556345},
    {233.91767669453552, 18.343132977039275, 0.001141722325273723},
    {11.587001547974618, 18.287886329068236, 0.0012117053201209601},
    {149.13370958934655, 18.155681884663455, 0.0008516093542550735},
    {286.6335257884683, 17.9701452831114, 0.0011088165942426513},
    {64.2025203394516, 17.8095275318063, 0.0009984050102133726},
    {201.6670927037851, 17.62645853704791, 0.001234073272124942},
    {339.00379603404895, 17.411623587504526, 0.001201900561007134},
    {116.40030578937387, 17.25723463246272, 0.0011666653765608794},
    {253.92864425727143, 17.23272827856913, 0.0011109731979714959},
    {31.35243721796751, 17.103972656906024, 0.0008709395142253417},
    {168.85702024614127, 17.025493931468787, 0.00106238880204068},
    {306.4069666267162, 16.967245289153606, 0.0010714727864516694},
    {83.94968553219655, 16.88650331044497, 0.001418126041298564},
    {221.44164197352723, 16.689303596580434, 0.001117141954173229},
    {358.9925785416805, 16.520543906057405, 0.0011540712549909392},
    {136.53390227499762, 16.343047320335113, 0.0008027179377229178},
    {273.95781863893285, 16.182861799635837, 0.0011425897839953654},
    {51.4580886604681, 15.987411543795641, 0.0010601534296372022},
    {188.92179502580782, 15.851950559942368, 0.001266749293658538},
    {326.2950878008723, 15.707570311970278, 0.0011956691121286199},
    {103.69683518399965, 15.59801727167398, 0.001038958337706005},
    {241.30387922476777, 15.507498735290806, 0.00108360409544488},
    {18.879116108729352, 15.452671212548628, 0.0008733749148411444},
    {156.4031309579526, 15.334710973598314, 0.001164478095086645},
    {293.94311401011646, 15.216234947136948, 0.001088386399710344},
    {71.51178078083666, 15.095236784649293, 0.001403716225363665},
    {208.9796847816256, 14.905761302187475, 0.0010827172063556992},
    {346.40036689605125, 14.709943420205587, 0.001093831364401676},
    {123.86501140574903, 14.543630836782667, 0.0007916503995160889},
    {261.3124289862227, 14.462595310986508, 0.0011375642544581698},
    {38.74472744621501, 14.306890553123404, 0.0011497637215149047},
    {176.22874936690113, 14.21982060369676, 0.0013132262430206132},
    {313.71283995078744, 14.113136200920188, 0.0011908906993494631},
    {91.20099442682013, 14.017297132604323, 0.0009439500395676527},
    {228.74876746282956, 13.855038981300932, 0.0010482186328039445},
    {6.3584107479254754, 13.765368203952598, 0.0009089722779864069},
    {143.89340399188342, 13.615572961694843, 0.001250159885177285},
    {281.37547053605965, 13.448146193747997, 0.0010964452380529247},
    {58.920572980267345, 13.2819764001205, 0.0013680933748286012},
    {196.383509724214, 13.119594831701972, 0.0010582208058238331},
    {333.76637085127214, 12.943530200529864, 0.0010585490284901902},
    {111.1889344015145, 12.824573361009953, 0.000851408082017769},
    {248.73970679958637, 12.752155443884485, 0.0011182616317476455},
    {26.20769854702259, 12.62972317118366, 0.001268914318728091},
    {163.72653151024343, 12.531264947490595, 0.0013168583030111604},
    {301.26500669347865, 12.452477012647037, 0.001183870763971128},
    {78.80589150201557, 12.347092549710139, 0.0008755252059979029},
    {216.29797342972452, 12.168381505829139, 0.0010434484476923476},
    {353.80791387616534, 12.02235147280927, 0.000955478777821728},
    {131.3111534354288, 11.858132957761077, 0.0013570353903208704},
    {268.74431211368875, 11.7386803373721, 0.0010814762859554033},
    {46.22569420627966, 11.591164253349723, 0.0013380090416596235},
    {183.6912305303629, 11.473511531550608, 0.0009872901113987386},
    {321.1144083295876, 11.316490061366842, 0.001041545206577897},
    {98.564967362323, 11.198916335701023, 0.0009450640242611787},
    {236.14994181159193, 11.083170295104093, 0.0011340937825815892},
    {13.710543856566888, 11.00033907748144, 0.001327437872388276},
    {151.23404582737163, 10.86919352354549, 0.001266708235059633},
    {288.76430533307814, 10.737051006355149, 0.0011492085752968094},
    {66.31988729406022, 10.599817483351384, 0.0008336485598717989},
    {203.7931155436428, 10.424347297015979, 0.0010577385003634737},
    {341.22963180179374, 10.250070735676413, 0.0010232727212216687},
    {118.6858332015525, 10.119295349604258, 0.0014539277093138854},
    {256.1677418496498, 10.0267348446682, 0.0010776828093705657},
    {33.63146535763501, 9.881706456412848, 0.0012777848788041797},
    {171.1285596984624, 9.785135723659758, 0.0008867085384568419},
    {308.6105578394371, 9.68131325436581, 0.001043071314277338},
    {86.11019347860982, 9.569982358178153, 0.0010368519806098892},
    {223.64274701077088, 9.420182920220693, 0.0011816100981873914},
    {1.2043086280608426, 9.323974816347176, 0.0013428414323337478},
    {138.7206144132613, 9.17122074411801, 0.0011937964344449126},
    {276.1878116082561, 9.040549852317202, 0.0011143286341912912},
    {53.713687632742285, 8.890219359120893, 0.0008025798660542122},
    {191.17752408132975, 8.749470551073472, 0.0010873848396183424},
    {328.5956922410376, 8.585884794355811, 0.0010830703348322602},
    {106.05062497399446, 8.467819069350412, 0.0014840864186241353},
    {243.60451075941222, 8.362551555090475, 0.0011033360850040514},
    {21.094610213360774, 8.239982425636917, 0.0011461771933472702},
    {158.61302798953423, 8.127807532017162, 0.0008175954913112064},
    {296.14970988664453, 8.024519835328055, 0.0010519968794132292},
    {73.68610287725255, 7.899788115949689, 0.0011263683651955075},
    {211.18301373192662, 7.730325040690453, 0.0012091775324594356},
    {348.68000142273877, 7.593955225792023, 0.0013361314127051434},
    {126.16556985795533, 7.454166125146829, 0.0010739497175975457},
    {263.6231306283843, 7.342280834929023, 0.0011279114290076748},
    {41.11535956535459, 7.205606639321672, 0.000767752354493937},
    {178.58949762406382, 7.095680628261082, 0.0011466633342548788},
    {316.0259426265615, 6.947569245982438, 0.0011115652328349678},
    {93.49620711311073, 6.825037687139017, 0.0014636574974718959},
    {231.0570209493401, 6.703741345930464, 0.0011058967510613393},
    {8.59526262760697, 6.610172684695213, 0.0010427664759302348},
    {146.10990749753063, 6.470858037989821, 0.0008088360976298833},
    {283.6242573045285, 6.349045565196225, 0.0010827099214523724},
    {61.17048093399002, 6.20674652763873, 0.0012164937232219293},
    {198.64552615271117, 6.049652164807707, 0.001208048743557452},
    {336.09414565211443, 5.891937651882688, 0.0012904227146823745},
    {113.56257873659939, 5.7747992390879395, 0.0009199783046933232},
    {251.06805112366044, 5.660597620435323, 0.0011446178059378506},
    {28.550723793045826, 5.522913527877548, 0.0007689652505805703},
    {166.0526725928363, 5.415407707638084, 0.0012400803577017141},
    {303.54439647681494, 5.299953103974612, 0.0011209595789619456},
    {81.04611837561242, 5.174258452726434, 0.001420610871799137},
    {218.57353837843698, 5.027699748138507, 0.0010674108206758836},
    {356.10662072914573, 4.929832057393505, 0.0009748337779629863},
    {133.61038043548058, 4.785278163994114, 0.0008240300053389995},
    {271.08126724554177, 4.672217483145832, 0.0011173621325380875},
    {48.60017992250799, 4.544642640420323, 0.0013083665533760499},
    {186.0685005169326, 4.4176767826532055, 0.0012203014840695926},
    {323.5024397347796, 4.256193313303043, 0.0012370708613422925},
    {100.97368245648336, 4.135642560192414, 0.0008147697482652945},
    {238.5168548771666, 4.0169433125528125, 0.0011214535670884397},
    {16.01073666887854, 3.897303867990532, 0.000862682296439303},
    {153.52112288598192, 3.7749550990517844, 0.001339046578862562},
    {291.0518777450211, 3.6620323551529763, 0.001137494813773326},
    {68.585152944448, 3.522172846559997, 0.0013518302388180674},
    {206.08597639810225, 3.3638097086610412, 0.0010315078642482694},
    {343.58275357117617, 3.2292838172141667, 0.0009227036137148719},
    {121.07003605174604, 3.106420082456803, 0.0008978387791459839},
    {258.5496411736969, 2.9868305041445575, 0.0011140638463995709},
    {36.053833976743825, 2.8537082444842046, 0.0014007972012269126},
    {173.53639388379864, 2.740351711158877, 0.0012157361473620631},
    {310.98330383363606, 2.5955743785015732, 0.0011938284856325932},
    {88.4587257741997, 2.4671700684487363, 0.0007574440502094439},
    {226.00198669242403, 2.3445489207299004, 0.0010955057865780975},
    {3.5187000960701655, 2.249155735504327, 0.0009693639674944314},
    {141.02584000734123, 2.1059836740716547, 0.0014092465061080095},
    {278.53251517044197, 2.003054898583804, 0.0011397819631947846},
    {56.07199016009641, 1.8698868784470941, 0.0012677560888933069},
    {193.54760994797599, 1.730227820363272, 0.0009991357858654167},
    {331.0016483486095, 1.5804363418016083, 0.0009165540687203721},
    {108.48268455159489, 1.464341880675896, 0.0010452296081714162},
    {245.99355130813228, 1.336850161528761, 0.0010909495426337699},
    {23.48311700701447, 1.2058302874166573, 0.0014816453866154742},
    {160.97945884760813, 1.0918392173990443, 0.0011600144263008332},
    {298.4764503457489, 0.9644501504426165, 0.001157942218520006},
    {75.97836276001443, 0.8221567270932624, 0.0007325836950700382},
    {213.50814501611728, 0.6752676435649292, 0.0011135690306437417},
    {351.0338284139743, 0.5684822384026943, 0.0010621965134585578},
    {128.5365705298127, 0.43584856461518146, 0.0014684313207630481},
    {266.0207355179779, 0.322096626599106, 0.001104992457883183},
    {43.55014318231681, 0.19913370822391083, 0.0011720076280636797},
    {181.02287813479077, 0.07813120409366157, 0.0009526368250812613},
    {318.45700284922776, -0.0781312040945267, 0.0009526368251278956},
    {95.92973780170217, -0.19913370822504695, 0.0011720076279910915},
    {233.4591454660408, -0.32209662659990274, 0.001104992457946225},
    {10.943310454205795, -0.43584856461581173, 0.0014684313207433733},
    {148.44605257004346, -0.5684822384027013, 0.0010621965134773356},
    {285.9717359679003, -0.6752676435645184, 0.001113569030611911},
    {63.50151822400263, -0.8221567270922127, 0.0007325836950676496},
    {201.00343063826836, -0.9644501504420748, 0.0011579422185637898},
    {338.50042213640893, -1.0918392173985358, 0.0011600144262825208},
    {115.99676397700236, -1.2058302874155211, 0.0014816453866452989},
    {253.48632967588458, -1.336850161527616, 0.0010909495425657763},
    {30.997196432422058, -1.4643418806745572, 0.0010452296082374196},
    {168.478232635408, -1.5804363418013998, 0.0009165540686822908},
    {305.9322710360418, -1.7302278203632648, 0.0009991357859254696},
    {83.40789082392162, -1.8698868784470775, 0.0012677560888333273},
    {220.9473658135763, -2.0030548985839784, 0.0011397819632415864},
    {358.4540409766771, -2.1059836740719953, 0.0014092465060932845},
    {135.9611808879485, -2.249155735505115, 0.0009693639675141134},
    {273.4778942915948, -2.344548920730876, 0.001095505786564766},
    {51.02115520981923, -2.467170068450078, 0.0007574440501977354},
    {188.4965771503823, -2.595574378502381, 0.0011938284856809118},
    {325.9434871002196, -2.7403517111595415, 0.0012157361473450548},
    {103.42604700727449, -2.853708244484436, 0.0014007972012779716},
    {240.9302398103213, -2.9868305041447747, 0.0011140638463263226},
    {18.409844932272044, -3.1064200824569914, 0.0008978387791978671},
    {155.8971274128411, -3.2292838172138096, 0.0009227036136765189},
    {293.393904585915, -3.36380970866032, 0.0010315078643162244},
    {70.89472803956858, -3.5221728465584468, 0.001351830238766526},
    {208.42800323899593, -3.6620323551521032, 0.001137494813798773},
    {345.95875809803505, -3.7749550990511884, 0.0013390465788501546},
    {123.46914431513855, -3.8973038679900527, 0.0008626822964572038},
    {260.9630261068507, -4.016943312552258, 0.0011214535670971422},
    {38.50619852753425, -4.135642560191939, 0.0008147697482313274},
    {175.97744124923838, -4.25619331330329, 0.0012370708613839861},
    {313.4113804670858, -4.417676782653737, 0.0012203014840477823},
    {90.87970106151118, -4.5446426404213405, 0.001308366553445165},
    {228.3986137384773, -4.672217483146585, 0.0011173621324574914},
    {5.869500548538363, -4.785278163994782, 0.0008240300053815852},
    {143.3732602548729, -4.929832057394292, 0.0009748337779228504},
    {280.90634260558153, -5.02769974813917, 0.0010674108207450127},
    {58.43376260840588, -5.174258452727086, 0.0014206108717509424},
    {195.93548450720286, -5.299953103975007, 0.00112095957896721},
    {333.4272083911813, -5.415407707638312, 0.0012400803576909467},
    {110.92915719097131, -5.522913527876871, 0.0007689652505928718},
    {248.41182986035668, -5.66059762043478, 0.0011446178059598626},
    {25.917302247417812, -5.7747992390871685, 0.0009199783046481099},
    {163.38573533190268, -5.891937651882072, 0.0012904227147170393},
    {300.834354831306, -6.049652164806944, 0.0012080487435214386},
    {78.3094000500267, -6.206746527637053, 0.0012164937232880869},
    {215.85562367948884, -6.349045565195248, 0.0010827099213761295},
    {353.36997348648674, -6.470858037989202, 0.0008088360976654891},
    {130.8846183564107, -6.610172684695136, 0.0010427664758873851},
    {268.4228600346781, -6.703741345930705, 0.0011058967511212196},
    {45.98367387090775, -6.8250376871397815, 0.0014636574974312264},
    {183.4539383574569, -6.947569245983221, 0.0011115652328248164},
    {320.89038335995485, -7.0956806282621026, 0.001146663334241185},
    {98.364521418665, -7.205606639323141, 0.000767752354490931},
    {235.85675035563509, -7.342280834930181, 0.001127911429041633},
    {13.314311126063984, -7.454166125147871, 0.0010739497175554084},
    {150.79987956127945, -7.593955225792618, 0.001336131412740013},
    {288.2968672520913, -7.730325040690559, 0.0012091775324093862},
    {65.79377810676469, -7.899788115949276, 0.0011263683652582672},
    {203.3301710973726, -8.02451983532776, 0.001051996879349467},
    {340.86685299448266, -8.127807532016876, 0.0008175954913423628},
    {118.38527077065534, -8.239982425635915, 0.0011461771933017765},
    {255.87537022460387, -8.362551555089182, 0.0011033360850456792},
    {33.429256010021895, -8.467819069348778, 0.0014840864186094743},
    {170.88418874297975, -8.585884794355236, 0.0010830703348180472},
    {308.3023569026879, -8.749470551073017, 0.0010873848396043256},
    {85.76619335127567, -8.890219359119904, 0.0008025798660299601},
    {223.2920693757622, -9.040549852316701, 0.0011143286342415683},
    {0.7592665707568642, -9.171220744117587, 0.0011937964344080796},
    {138.27557235595768, -9.32397481634761, 0.001342841432370236},
    {275.8371339732481, -9.420182920221581, 0.0011816100981272503},
    {53.36968750540929, -9.569982358179635, 0.0010368519806716787},
    {190.86932314458124, -9.681313254366929, 0.0010430713142311199},
    {328.35132128555597, -9.785135723660963, 0.0008867085384847551},
    {105.84841562638378, -9.881706456414111, 0.0012777848787539766},
    {243.31213913436895, -10.026734844669477, 0.0010776828093992691},
    {20.794047782466485, -10.11929534960543, 0.0014539277093197152},
    {158.25024918222388, -10.250070735676365, 0.0010232727212099951},
    {295.6867654403744, -10.424347297015528, 0.001057738500357783},
    {73.1599936899561, -10.599817483349874, 0.0008336485598408046},
    {210.7155756509388, -10.737051006353994, 0.0011492085753582158},
    {348.245835156645, -10.869193523544569, 0.0012667082350280728},
    {125.76933712744912, -11.000339077480204, 0.0013274378724291152},
    {263.32993917242425, -11.083170295102544, 0.0011340937825183059},
    {40.91491362169365, -11.198916335699725, 0.0009450640243226223},
    {178.36547265443016, -11.316490061366734, 0.0010415452065518401},
    {315.7886504536554, -11.473511531550844, 0.00098729011142879},
    {93.25418677773989, -11.591164253350307, 0.0013380090416149023},
    {230.73556887033058, -11.738680337372497, 0.001081476285973083},
    {8.168727548590411, -11.85813295776126, 0.0013570353903323193},
    {145.67196710785367, -12.02235147281034, 0.0009554787778097455},
    {283.1819075542946, -12.168381505830343, 0.0010434484476980442},
    {60.6739894820032, -12.347092549711618, 0.0008755252059650527},
    {198.21487429053923, -12.452477012647947, 0.0011838707640356133},
    {335.75334947377405, -12.531264947491499, 0.0013168583029834783},
    {113.27218243699431, -12.629723171184247, 0.0012689143187756711},
    {250.74017418443069, -12.752155443885211, 0.0011182616316918735},
    {28.29094658250286, -12.824573361010243, 0.0008514080820631373},
    {165.71351013274503, -12.943530200529219, 0.0010585490284756572},
    {303.096371259803, -13.119594831700901, 0.0010582208058586113},
    {80.55930800374891, -13.281976400117774, 0.001368093374804085},
    {218.10441044795755, -13.448146193746192, 0.0010964452380506078},
    {355.5864769921336, -13.615572961693374, 0.0012501598851899273},
    {133.12147023609123, -13.76536820395125, 0.0009089722779724786},
    {270.731113521188, -13.855038981299911, 0.0010482186328235922},
    {48.27888655719797, -14.017297132604154, 0.0009439500395306743},
    {185.7670410332306, -14.113136200920845, 0.001190890699406525},
    {323.2511316171176, -14.219820603697999, 0.001313226242997703},
    {100.73515353780519, -14.306890553125543, 0.001149763721571003},
    {238.16745199779712, -14.462595310988158, 0.0011375642544087577},
    {15.614869578271177, -14.543630836783978, 0.0007916503995423428},
    {153.07951408796782, -14.709943420206907, 0.0010938313643879352},
    {290.5001962023928, -14.90576130218844, 0.0010827172063906222},
    {67.96810020318078, -15.09523678464985, 0.0014037162253493632},
    {205.53676697390088, -15.216234947136897, 0.0010883863996881127},
    {343.0767500260643, -15.334710973598222, 0.0011644780950983238},
    {120.60076487528615, -15.45267121254793, 0.0008733749148226278},
    {258.1760017592473, -15.507498735289559, 0.0010836040954768555},
    {35.78304580001566, -15.598017271672306, 0.001038958337657631},
    {173.18479318314454, -15.707570311969485, 0.0011956691121698267},
    {310.5580859582094, -15.851950559941384, 0.0012667492936354727},
    {88.02179232354938, -15.987411543793186, 0.0010601534296947118},
    {225.52206234508515, -16.182861799634434, 0.0011425897839517812},
    {2.945978709020135, -16.343047320333575, 0.0008027179377385218},
    {140.48730244233758, -16.52054390605688, 0.0011540712549785292},
    {278.038239010492, -16.689303596580856, 0.001117141954202222},
    {55.53019545182312, -16.886503310446457, 0.0014181260412914683},
    {193.0729143573023, -16.96724528915498, 0.0010714727864144793},
    {330.6228607378773, -17.02549393147085, 0.001062388802050574},
    {108.12744376605161, -17.103972656909146, 0.000870939514204198},
    {245.55123672674793, -17.232728278572097, 0.0011109731980065642},
    {23.07957519464636, -17.257234632465615, 0.0011666653765142637},
    {160.4760849499692, -17.411623587505137, 0.0012019005610366315},
    {297.8127882802322, -17.626458537047878, 0.0012340732720949677},
    {75.27736064456434, -17.809527531804918, 0.00099840501026002},
    {212.84635519554837, -17.97014528310996, 0.0011088165942118643},
    {350.34617139466985, -18.155681884662247, 0.0008516093542647349},
    {127.89287943603999, -18.287886329066172, 0.0012117053201093702},
    {265.56220428947887, -18.343132977036095, 0.0011417223252912932},
    {43.12865032742204, -18.51331300320758, 0.0013969286315574758},
    {180.57522037383214, -18.583315215716105, 0.0010625768602191908},
    {318.0571260224296, -18.674627515660173, 0.0009903708519568208},
    {95.54072395455835, -18.774350957396198, 0.0009618585104215319},
    {232.9382681168637, -18.964681061802825, 0.0011054506673567964},
    {10.354265071240976, -19.060785373655122, 0.0012767706020880495},
    {147.87598418161681, -19.27595757360288, 0.0011966495071408238},
    {285.3010123008372, -19.52190181447541, 0.0012036865310239796},
    {62.75983090172779, -19.726593819609022, 0.0009341946942718345},
    {200.34637139934856, -19.821307439577513, 0.0010946740523189754},
    {337.8834539731384, -19.912198428339373, 0.0009222254861569707},
    {115.38469727463456, -20.011361376645443, 0.0012703642566204074},
    {252.95943589460228, -20.022463541839034, 0.0011274612537092528},
    {30.568870219333448, -20.052337898439884, 0.0013386744565219353},
    {167.88926428452956, -20.170229139383913, 0.0010412821481338244},
    {305.1746771877032, -20.33265975729218, 0.0009663043078340272},
    {82.6501823002788, -20.49424659113873, 0.0010352862163371369},
    {220.19150105995163, -20.715057756848964, 0.0011090980492134436},
    {357.6373482767057, -20.944022901766285, 0.0013384083918061055},
    {135.21833762958153, -21.10458000553736, 0.0011629880308668145},
    {272.8447333582171, -21.284406624136782, 0.0011619651091778996},
    {50.34880631125828, -21.51434058144709, 0.0008758934207884648},
    {187.86585405007386, -21.55466704482549, 0.0011130010348594623},
    {325.47457440095536, -21.61073079543407, 0.0010391576478872408},
    {102.9622739680369, -21.679245576163606, 0.0013088132043162668},
    {240.29787864565333, -21.82574135251172, 0.0010981883636391192},
    {17.80369349153074, -21.819883177679102, 0.0012426852017996845},
    {155.2399625461714, -22.064167746092597, 0.0010185802780545575},
    {292.5226127361731, -22.33660408948938, 0.000978016258544497},
    {69.98282025038671, -22.5304952871925, 0.0010736554396222557},
    {207.58804998030183, -22.673009145900092, 0.0011327074669429586},
    {345.07380991492056, -22.839755152171318, 0.0013385972928642135},
    {122.5977318914242, -22.941574786873684, 0.00111685609831882},
    {260.3231089096352, -22.923509961074068, 0.0011181366787878309},
    {37.882416987266424, -23.071950465329728, 0.0008405005793031022},
    {175.2299642267193, -23.105984534049522, 0.0011266953738048085},
    {312.6320484013091, -23.11636522791841, 0.0011443497784925595},
    {90.14561532239529, -23.236585633991567, 0.001268988306181316},
    {227.57615554118547, -23.544553054735292, 0.0010831679315507327},
    {5.004512007028463, -23.711388972455378, 0.0011328015472108236},
    {142.62226510967858, -23.93250310739453, 0.0010092845173475123},
    {280.12766615421316, -24.25494932674988, 0.0009965146926498635},
    {57.58563832370603, -24.49598939829454, 0.0011476084855955625},
    {195.1628412286554, -24.54240484679985, 0.0011456397221250318},
    {332.7357428741212, -24.64804479711268, 0.0013152739628440923},
    {110.18406995617518, -24.72970841054738, 0.0010561190155206417},
    {247.71439425826117, -24.679071081388823, 0.001113025831614601},
    {25.304373890434285, -24.62894646947046, 0.0008270719121552201},
    {162.5821216418257, -24.850453153116042, 0.001139454478406939},
    {299.7436837326267, -25.093388391573505, 0.0011695098988125528},
    {77.23809039074463, -25.27129689579376, 0.0012401343608774338},
    {214.84464083709034, -25.483429903024426, 0.0010920783024650454},
    {352.29432239326223, -25.728215989777276, 0.0010486265393190482},
    {129.85489672352784, -25.840093016019978, 0.0010142327386806372},
    {267.54237226621217, -25.98306304064234, 0.0010154301567776756},
    {45.05159131461623, -26.225478181337024, 0.0012212048385900106},
    {182.46511797295403, -26.193416940972423, 0.0011233616690111995},
    {320.11977962395474, -26.148860161421933, 0.0012427817200483613},
    {97.66279753877812, -26.25710953020724, 0.0009887339448493614},
    {234.90404062244895, -26.50526547996231, 0.0011352414982379675},
    {12.44707214115645, -26.50611165937103, 0.0008742565642413954},
    {150.07261789035874, -26.845685627754808, 0.001175875495406236},
    {287.4416933290892, -27.261472653197586, 0.0012151632960238923},
    {64.87409981538613, -27.474017439295025, 0.0012242927402333695},
    {202.48535504999634, -27.571047879789138, 0.0011025780823950132},
    {339.9114694710334, -27.74081234831852, 0.0009826112276958199},
    {117.35908713747274, -27.8038635285822, 0.0010398941265754962},
    {255.11085102146018, -27.660258930826878, 0.0010603272250436944},
    {32.5723516576329, -27.7539436162836, 0.0012914656595670617},
    {169.78139099122717, -27.795271086701646, 0.0010983165824390234},
    {306.9909338339243, -27.801836972689085, 0.0011642317046481239},
    {84.57151318792626, -27.94250117851445, 0.000959372152989886},
    {222.10925280796732, -28.293524502728836, 0.0011109260948127372},
    {359.6197086061418, -28.56038792054135, 0.0009265932051691954},
    {137.21287153215383, -28.710985443206614, 0.0011853709074024423},
    {274.7617484249182, -29.05598015904332, 0.0012195366774259404},
    {52.27171887380858, -29.34902823892148, 0.0011712033832390312},
    {189.7446945925763, -29.30551990394076, 0.0010878262205468764},
    {327.5147695833657, -29.438851984935546, 0.000947249967974924},
    {104.98224718223132, -29.567931237369834, 0.0011028497686249499},
    {242.3868427531008, -29.46463016905434, 0.0010925230381826406},
    {20.069022499321154, -29.379395810719945, 0.0013410416414680988},
    {157.65802580904855, -29.841705634386994, 0.001102379898882446},
    {294.877751164691, -30.25561223460226, 0.0011031136679230792},
    {72.29584378416841, -30.417281637642834, 0.0009879481950020221},
    {209.94678183574345, -30.593764510175255, 0.0011110349641223751},
    {347.16554120027877, -30.796557403144256, 0.0010516044202332501},
    {124.62954605117372, -30.842861984994787, 0.001205210161657962},
    {262.37333585635685, -30.91476078780056, 0.0012248761039134496},
    {39.69859081106022, -31.092002475545165, 0.0010920562729525827},
    {176.86355223768018, -30.96673866837368, 0.0010830045488055664},
    {314.2118675789911, -30.65552854167407, 0.0009135406278851548},
    {91.87979115365842, -30.77791137574493, 0.001150237930240286},
    {229.29088524810297, -31.333188606061782, 0.0011062199281137754},
    {7.030910925132564, -31.423109310333203, 0.0013671318495580716},
    {144.59494904169236, -31.678298200463296, 0.0010693033361987429},
    {282.0252224729609, -32.17288351723033, 0.0010385676129152186},
    {59.58096511649771, -32.47796086357256, 0.0009913625985696417},
    {197.04618130336056, -32.47689227586128, 0.0010936559631967427},
    {334.86866279338636, -32.836808406653205, 0.0011769791240672887},
    {112.29628905644444, -32.919709808689674, 0.0011944453902937254},
    {249.85873928015567, -32.57108112930917, 0.0011567787850433153},
    {27.340316375473776, -32.691245814446056, 0.0009964453726165159},
    {165.1365352044609, -33.090886321274425, 0.0011085465206433658},
    {302.50020648353143, -33.236056639375256, 0.0010307702994284869},
    {79.9588309209986, -33.30051013204601, 0.0012293801044698774},
    {217.57352212081565, -33.67729806584209, 0.0011428712064095188},
    {354.6465602822922, -33.77965259391241, 0.0013331248008777359},
    {132.12363393737374, -33.83956824764075, 0.0010530999028838188},
    {269.72455618587674, -34.221706851240626, 0.001011158985574707},
    {46.95259831885156, -34.406755883264296, 0.001030500532190499},
    {184.08191863695282, -34.1625970872607, 0.0011115538840051956},
    {321.33965532150864, -33.90280938010392, 0.0012080505616627359},
    {98.98745074794296, -34.14719832449031, 0.0011295331348556426},
    {236.75183650592052, -34.27638988646165, 0.0010803939527992202},
    {14.725189684530385, -34.197288203230926, 0.0009111564911879085},
    {152.1552151704459, -34.64885441381143, 0.0010849748587212602},
    {289.4784440834286, -35.28041455465997, 0.0010917488851821986},
    {67.0952300229556, -35.57643124110181, 0.0011993363192924795},
    {204.5002926667486, -35.61309405653133, 0.0011311026357300644},
    {342.36186804620763, -36.189018737551955, 0.0012152770183467484},
    {119.7460102754321, -36.21365383818547, 0.001045915455447898},
    {257.07185537977136, -35.997435233371846, 0.001000861912613636},
    {34.42778185632306, -36.24210636721354, 0.0010898472547008805},
    {172.477452732628, -36.57862782467291, 0.0011444844309507107},
    {310.1730290290883, -36.37094630168964, 0.0012806634865793964},
    {87.6953780092363, -36.380188750515835, 0.0010481106551944275},
    {225.15577771405844, -37.04687329416442, 0.0010898111273527067},
    {2.376649529829141, -36.84595346330401, 0.0008947640622151053},
    {139.764758361587, -37.024114985161646, 0.0011409168079709242},
    {277.19478829056266, -37.598789987227775, 0.0011836351348941262},
    {54.367742026885566, -37.74552576355006, 0.0011889514950630107},
    {191.4490316064868, -37.520383950105874, 0.0011268611146471182},
    {328.5356916693512, -37.41634324069204, 0.0011071396783653067},
    {106.25036126732157, -37.66855734175269, 0.0010496265980799485},
    {244.41777575562563, -37.50737618331772, 0.0010843756530648399},
    {22.140008532200447, -37.80241340365541, 0.0011655613428758096},
    {159.6712622716939, -38.04970702458366, 0.0011156834176078861},
    {297.257515560154, -38.36632465050459, 0.0011751327550407107},
    {74.9755654733969, -38.57328711478303, 0.0010260481059769706},
    {212.1240589745878, -38.75339225207235, 0.0010592650475860616},
    {350.1346737783394, -39.3969444668833, 0.0009237324599960876},
    {127.44875007414018, -39.374379578724096, 0.0011430147885107395},
    {264.41235355391206, -39.46274725172603, 0.0011743138436777437},
    {41.74361349935362, -39.76042057134558, 0.0011601606237018136},
    {180.00401111979915, -40.037444175223165, 0.0010938278031457456},
    {317.6785557349676, -39.95487182107058, 0.0009797191310573314},
    {95.16693460358617, -40.109073176797125, 0.0011234338878017172},
    {233.1244085004685, -40.21754050856201, 0.0011699155477696266},
    {10.622526168164296, -39.78815868420931, 0.0012411876463336712},
    {147.74881079019306, -40.21557398523669, 0.0011165083662445347},
    {284.96047691432227, -40.939069138991314, 0.0011071190191379436},
    {62.121703082640295, -41.04682998330359, 0.0010746096990791871},
    {199.21089081285092, -40.902999070505174, 0.0010931468220739143},
    {336.0926017556309, -40.989884762158994, 0.001002122270734779},
    {113.92699214015602, -41.2364773237041, 0.0011357437330023728},
    {252.13286398394408, -41.41435149626222, 0.001187868335824362},
    {29.6874337853067, -41.82143695026235, 0.0011587970816843728},
    {167.2912991876669, -41.87658075441143, 0.0010905725776936628},
    {305.31740885903906, -41.72804636792563, 0.0010063259588606493},
    {83.06020470459875, -41.84305062971578, 0.001156548559504001},
    {219.7989235315877, -42.29482874904875, 0.0011462816153008839},
    {358.19093443139104, -42.60012662140806, 0.001285184454635163},
    {135.3313647229595, -42.70169112678052, 0.0010832979237963747},
    {272.0828791865645, -43.07579714894466, 0.0010695074229662832},
    {49.45421680383006, -43.3765150745372, 0.0010995242941816829},
    {187.82255789124125, -43.66252871315893, 0.001113710502447752},
    {325.3950366174944, -43.81642237125222, 0.0011926307006116892},
    {102.95954278002232, -43.961934529497185, 0.0011410673517942684},
    {241.2373914150544, -43.651942209057275, 0.0010864560184315956},
    {18.59196398515303, -43.84435589725205, 0.001079664914443229},
    {155.78731130849545, -43.98457992075409, 0.0011351730141713826},
    {293.2390165706928, -44.232204076500196, 0.0011052657736000922},
    {70.48483414506313, -44.240510274202414, 0.0011706280747497961},
    {207.49773631863806, -44.46188170221939, 0.0011570264611882243},
    {344.3219861904785, -44.56506039643121, 0.0012445281021993217},
    {122.32269757568088, -44.83745971513912, 0.0011293595252676748},
    {260.38803016802797, -45.47151383352416, 0.0011205129215420887},
    {37.873911314567785, -45.890100043869786, 0.0010979918348566764},
    {175.55661158499956, -45.84420976855155, 0.0011627249469135456},
    {313.5859201488805, -45.84797610925978, 0.0012189806927626065},
    {91.12305599177796, -46.04226572422362, 0.0011326661339313537},
    {228.32311749955127, -45.75497396091332, 0.0010772456586292756},
    {6.91577581681323, -45.65026521584645, 0.0010196690774143839},
    {143.8469487459754, -46.123564518477835, 0.0011263499683942788},
    {280.4851230465157, -46.773510999378125, 0.0011374052597780322},
    {57.893120867690335, -47.003635490878665, 0.0011158587405176025},
    {196.3862255715068, -47.32049995470447, 0.0011293089582792275},
    {333.9391698758429, -47.73092698398624, 0.0011184562756472143},
    {111.57642578080421, -47.83524807749149, 0.0011192027151005121},
    {249.53864090863783, -47.92843318940357, 0.0010837244195120545},
    {26.949755815452416, -48.33747091919572, 0.0010973383507483121},
    {164.32467290863187, -48.25554792166933, 0.001137580010520186},
    {302.0927553297659, -47.864154553662274, 0.0011748399893155553},
    {79.40769981201342, -47.848705742459316, 0.0010917597141132003},
    {216.3692993260736, -48.485499827468686, 0.00112094946857848},
    {353.3592700361867, -48.238884493991065, 0.001056350258079144},
    {131.5023089590731, -48.715130399971024, 0.0011568630686995317},
    {269.3981901145208, -49.6268114295078, 0.0011441921051035886},
    {46.71866309876301, -49.99389865818052, 0.0011205343503780183},
    {184.55685056009904, -49.98940819676414, 0.0011313938720902256},
    {322.73390376525987, -50.31580501247572, 0.0010738800469114124},
    {100.19483774591428, -50.44489776912344, 0.001104435131844695},
    {237.66038399985757, -49.72873931167184, 0.0011657980412774003},
    {15.519704062195252, -50.21680544691131, 0.001172368902892964},
    {152.9396957861413, -50.39115682906371, 0.0010950200528848572},
    {289.75098587092623, -50.44399880942999, 0.0011263486955833894},
    {67.25342689532572, -50.51917647497309, 0.0011049408748094547},
    {205.7506376511301, -51.24123100552187, 0.0011004319823820408},
    {343.4262475081728, -51.62266650800421, 0.0010585327918535233},
    {121.06707003959711, -51.71515208909346, 0.0010933446259656584},
    {258.69304290717895, -52.40537845065397, 0.0011015925026099643},
    {35.79774751455255, -52.87842644421177, 0.001156958899687006},
    {173.42257093802473, -52.658140863886146, 0.00106642086693258},
    {311.5574505172042, -52.48183963868941, 0.001065301301501736},
    {88.96178147489823, -52.64744109553529, 0.0011050287302260347},
    {226.138663637661, -52.30408473143411, 0.0011338740944780022},
    {3.328618092861394, -51.74393290429836, 0.0011012450097964267},
    {141.51683198994704, -52.62533204620019, 0.001100209264882985},
    {278.9734717762643, -53.77082064333806, 0.0010848719438987435},
    {56.30776084626747, -53.98537905772573, 0.0011496393283182784},
    {194.2656650286716, -54.06976348931482, 0.0010970769886981906},
    {332.5101826429074, -54.75104413357327, 0.0011428313301936888},
    {109.79110897996296, -54.776338327488695, 0.0011077028931677606},
    {247.15148910489734, -54.66300370592726, 0.0011380079026060488},
    {24.031304118768507, -55.26934551608128, 0.0010773543787065964},
    {161.92683518586625, -55.213737311783085, 0.0011075955375285153},
    {299.6738352697289, -54.37824068752713, 0.0010315819736061303},
    {77.35945134022333, -54.417296596846064, 0.0011195223288449291},
    {216.10003847392352, -55.74842944785483, 0.001067219353819921},
    {354.14795073656455, -55.59909466376621, 0.0011398274380942847},
    {131.6185892970532, -55.97886948152559, 0.0010534488342687654},
    {268.02674922490786, -57.08473923160835, 0.0011213557454467058},
    {45.17111232461103, -57.45762940884806, 0.001068721099075298},
    {182.73807312882104, -57.259362901277306, 0.0011258322245969686},
    {320.8779170891523, -57.521285155936695, 0.0011372161466148137},
    {98.04018125875551, -57.70278962344207, 0.0011434372888180588},
    {235.31441918302832, -56.61677065691975, 0.0009940983902150392},
    {11.057235453248868, -56.82579498399477, 0.0010647619802706513},
    {149.96974011926963, -57.53247547869035, 0.0010820839558641523},
    {289.44299020572413, -57.88798939007771, 0.0011194186031349197},
    {67.06890382226105, -57.84999455703829, 0.0010354610228373263},
    {204.91784630617207, -58.413157545464486, 0.0011112272535002488},
    {343.57842923549157, -58.998316299663394, 0.001088718825277456},
    {120.67437475473012, -58.99207759305477, 0.0011155417111872324},
    {255.7211251603195, -59.94377971675458, 0.0010923071572368362},
    {32.6971069938104, -60.460147868979064, 0.0011259499856979536},
    {170.59382990805432, -60.31312949184397, 0.0011280925784230827},
    {307.7108289554818, -59.54821010712021, 0.0011351741817634267},
    {84.89694784463153, -59.87964016710937, 0.0010507961845519296},
    {224.97085871514375, -60.86542229766596, 0.0011600803325892246},
    {0.8167530379109339, -61.46248550581519, 0.0011183226986092427},
    {139.11697268218, -61.62405062898675, 0.0011689776568865175},
    {278.59347174420327, -61.721358065503644, 0.001089681629739087},
    {56.187573578081334, -61.794379861589015, 0.0011132138096882067},
    {193.29815148332364, -61.6504834652667, 0.0010732661922270856},
    {331.524245278786, -62.386432022999266, 0.0010857940159967343},
    {108.75508645127937, -62.414657998255336, 0.001067319170066215},
    {242.16343897323253, -62.38596241597613, 0.0011464045623534598},
    {18.14012126297274, -62.45701678713346, 0.0011468222645802033},
    {157.36258286842403, -63.25943319242653, 0.0011185214518756933},
    {296.62964729213974, -63.926794152177685, 0.001128849843024559},
    {73.40629250217323, -64.09232902555733, 0.00120382660658949},
    {211.95262415434112, -64.46946840615354, 0.001143198452980239},
    {347.72840194288943, -65.68290053278314, 0.0011391492764832498},
    {125.79647460014326, -65.45005598592809, 0.0011320522383462242},
    {265.3745227985379, -65.14605323734206, 0.0011401304605953445},
    {43.048915455111825, -65.5243988656914, 0.0011523625590584919},
    {180.06634942721797, -65.57097021456617, 0.0010941259214097894},
    {316.4671656251329, -64.96530760719904, 0.0010495609769776435},
    {93.85241527318853, -65.2965938306075, 0.001124773744259679},
    {229.67756807480413, -67.5111221037293, 0.0010960418297927925},
    {6.253620170849207, -67.95918012231287, 0.0011303365189421722},
    {144.78025953953153, -68.10537634799523, 0.001093342580162581},
    {283.7796360651597, -68.4707067276588, 0.001121974194291267},
    {60.24198117020081, -68.77966096460938, 0.0010543730904862324},
    {196.85766049810707, -68.37667898896416, 0.0010965273895137016},
    {330.4508613721692, -69.49026916430819, 0.0011510532077392683},
    {108.8095129668102, -69.40543271529407, 0.001121977889283042},
    {249.27223957738232, -68.42295125205233, 0.001094210327363168},
    {26.39380170016386, -68.23688447735888, 0.0010451674863813053},
    {165.78235561228325, -69.36268962920103, 0.0011187744558763093},
    {305.50444749406245, -70.24349300816995, 0.0011448788218800625},
    {82.0519244029866, -70.3118952556915, 0.0010845499249087448},
    {213.7185598169134, -71.89902262301794, 0.00107930350983471},
    {349.6256835909798, -72.76031196222343, 0.0010674504605298174},
    {127.93065761985493, -72.44593684056763, 0.0010942535861685645},
    {266.19887786895566, -72.38978348532662, 0.0010800682906624017},
    {41.90379164388966, -73.0270050660122, 0.0011264248976549985},
    {184.30779646088757, -73.81276771819059, 0.0011625709776481056},
    {321.43635105164, -75.81720530059168, 0.001121469647457916},
    {98.44002319469179, -75.44233246323914, 0.0011438021731609185},
    {237.54915607507138, -74.54060700409984, 0.001131644512141836},
    {15.002577252304995, -74.5709455989875, 0.0011353197057361257},
    {153.12082303358795, -74.95323362369601, 0.0011123673711538843},
    {290.36130673914676, -75.55055633233684, 0.0010863877847264538},
    {66.56495430610579, -75.6979310294546, 0.0011305981535197477},
    {211.07274826942833, -78.59164962482558, 0.0011520544769266937},
    {350.41749087924745, -79.70611325355388, 0.0011225684646349516},
    {126.362324895815, -79.24773872223977, 0.0011102218967530722},
    {260.0000954486652, -79.11251521628341, 0.0011205896447597802},
    {35.31975255683639, -80.0783286337585, 0.001097581098119803},
    {173.73286942636295, -80.27146291967419, 0.001086357844886834},
    {302.89201084063143, -82.22826209786888, 0.0011131578815578573},
    {81.13024566255828, -81.94570911584334, 0.001082506686976744},
    {234.2446510802043, -84.82165629546692, 0.0010942157467093642},
    {6.352631504157347, -86.53638471094177, 0.0011203106465751112},
    {140.33967314275583, -85.9775158581993, 0.0010702104354377675},
};

const FliegeSet kFliegeSets[] = {
    {1, 4, kFliege4},
    {3, 16, kFliege16},
    {5, 36, kFliege36},
    {9, 100, kFliege100},
    {19, 400, kFliege400},
    {24, 625, kFliege625},
    {29, 900, kFliege900},
};
const int kNumFliegeSets = 7;
}  // namespace hrtfup::detail
