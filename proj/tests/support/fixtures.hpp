// Generated by tests/support/make_fixtures.py -- do not edit by hand.
#pragma once
#include <vector>

namespace fixtures {

struct PointValue {
  std::vector<double> x;
  double f;
};

inline const std::vector<PointValue> ackley_points = {
  {{1.0}, 3.6253849384403627},
  {{1.5, -2.25}, 8.467670048401617},
  {{24.57422363601102, -23.010306969946434}, 21.49340375201244},
  {{0.5625540602428458, -23.095327182718435, -29.502580197287084, -27.595176259275135, -20.146502123397585}, 21.73570936609314},
};

inline const std::vector<PointValue> griewank_points = {
  {{100.0, 0.0}, 2.637681127712316},
  {{-3.5, 7.25, 19.0}, 1.096687131699819},
  {{-77.63701992120559, 79.59394454950882}, 4.688103943786332},
  {{-202.86834915055135, -20.293524947983542, 439.05511021941334, 414.7161086657462, -409.25906035506785}, 144.47362510735232},
};

inline const std::vector<PointValue> levy_points = {
  {{-3.0}, 1.0},
  {{0.5, -9.0, 4.0, 4.0}, 26.650965975725963},
  {{1.860540315028711, -5.957154270163912}, 6.931933568678099},
  {{2.0563058739949636, 0.6967912015227835, -5.708815122361896, -9.957013529733118, 7.327326288505738}, 108.17855927733956},
};

inline const std::vector<PointValue> rastrigin_points = {
  {{0.5, 0.5}, 40.5},
  {{1.25, -2.5, 3.0}, 46.8125},
  {{3.8023741736142673, 2.8749257201020146}, 32.423786869805696},
  {{-5.06094336159884, -0.7400173783167485, -1.3856886668184187, -4.426641873946839, 0.15904261084984128}, 100.12951251680406},
};

inline const std::vector<PointValue> schwefel_points = {
  {{-420.9687}, 837.9657872721625},
  {{420.9687}, 1.272783748618167e-05},
  {{10.0, -10.0, 250.0, -499.5}, 1526.5532948619698},
  {{-342.19648696618253, 331.76093083234434}, 917.1652118253655},
  {{-328.96578237191443, -67.09011424046207, -85.67951054994052, 53.626782315406786, -3.4326127661047394}, 1914.6870650745527},
};

inline const std::vector<PointValue> michalewicz_points = {
  {{1.5707963267948966}, -0.0009765624999999983},
  {{2.202906, 1.570796}, -1.8013034100904854},
  {{0.6515425667801095, 1.9496506778192038}, -0.0002332229568741564},
  {{1.1395855270571842, 0.2499673859928209, 2.2648152950046536, 0.1420419982070537, 1.3730892160254957}, -0.543155329076495},
};

inline const std::vector<PointValue> weierstrass_base_points = {
  {{0.25}, 1.9999990463251205},
  {{-0.5, 0.0, 0.37}, 6.2100923437794995},
  {{-0.03322557660149705, -0.06606562555728368}, 1.6990522471113567},
  {{0.214435570972773, -0.3916393046144584, 0.18756056204925464, 0.24615323065995165, -0.07017443279449809, 0.09375711010751653}, 11.158713653024773},
};

inline const double srw_rot2_theta = 0.7;
inline const std::vector<double> srw_rot2_shift = {0.1, -0.2};
inline const std::vector<double> srw_rot2_x = {0.3, 0.45};
inline const double srw_rot2_value = 4.58078118997173;

inline const double schwefel_residual_1d = 1.272783748618167e-05;

inline const double sbx_u08_c1 = -0.3572088082974534;
inline const double sbx_u08_c2 = 2.3572088082974534;
inline const double polymut_u09_delta = 0.07377667396743226;
inline const double polymut_u09_x = 0.14755334793486452;

struct ShapiroCase {
  std::vector<double> sample;
  double w;
  double p;
};

inline const std::vector<ShapiroCase> shapiro_cases = {
  {{1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0}, 0.9701646110856056, 0.8923673061902978},
  {{4.240712312913066, 2.3627950802515274, 3.1851603099374453}, 0.9948866293899997, 0.8633134357731292},
  {{-2.3795332172311676, -0.34494476558144616, 3.3709054068040665, 3.784750061492362}, 0.8873182547842713, 0.3708343833482598},
  {{0.2161227908793646, 3.778927394431441, 2.7385709583314837, -1.821960492407272, 1.4244150039335493}, 0.9798822419275379, 0.9339875818034599},
  {{0.9043743624532818, 0.8828702334556099, 0.922329482436203, 1.520399862431224, 1.1695857358011137, 1.060121523062276}, 0.8304483210245045, 0.10843365219746764},
  {{1.8642069759382647, 1.158740089777621, 0.5306720504486903, 0.7337699194700862, 1.5979684570426615, 1.0065719878025647, 0.5573581082239081}, 0.9163057533731254, 0.4412498878727751},
  {{-2.214945523266567, -0.3469009921961419, 4.204042512237113, 1.1077223355191181, 1.386581272140739, 4.525725154389415, -3.9096686808012517, 2.53216617692245}, 0.9542359299086765, 0.753754667762887},
  {{0.8043339781661094, 0.2579313065504947, 0.53204293771015, 0.6741609964739612, 2.708429553945672, 0.4792554633562803, 1.360759154774814, 0.5946228852772998, 1.3978200537627645}, 0.8135656020208875, 0.02913830341848651},
  {{3.7704026769298444, -4.004749831956272, -1.902859368575276, 0.2320496903458089, -1.2112521301321708, -4.928654737790696, 1.4825075716700198, -4.661630519435449, 1.8447140348917177, 0.9174982728333738}, 0.9404021532035273, 0.5574968986906303},
  {{0.5094094483086026, 0.834443756203064, 1.4808233317939292, 1.0667118654184178, 1.1458489059153487, 1.4528804721054858, 0.42406480728531465, 0.5055465669534344, 1.6330475691328417, 0.5852914345787276, 0.8629387473387812}, 0.9153456968757689, 0.28175908767547553},
  {{0.7968375858583303, 1.0452490218662769, 4.973875698375384, 4.772460068968898, 7.315693039688366, -2.8778400749971462, 2.8568304484997316, 3.9709122385107327, 0.10780688130550464, 2.106496513764241, 3.5561702099238364, 5.046228664228563}, 0.9726318477780559, 0.9363239282213047},
  {{4.068145872477547, -4.621897862441509, -1.9182396832202242, 4.684107474801765, 0.04198236988670345, 1.4730901118932156, 1.3435985823509844, 4.419497533439827, -2.309301990633037, 1.3446962118577872, 2.1348310167512796, -2.7177774993517847, -4.487908585865491}, 0.9282701542709266, 0.32346138015848747},
  {{-4.088347589263417, -2.8439195940423168, -1.2740135092907376, -2.8130867313781662, -4.539499183721895, 0.38768440020087347, 2.751823738286003, 0.03420480713277829, -2.745294301679073, -1.5331000558177657, 2.705518160981036, -3.6971592524222476, -2.5902058402754746, 2.680228021236964, -3.537205705416817}, 0.8788216114558869, 0.045564475145906246},
  {{4.802404526536888, 1.1643951848619485, 3.7023794297371837, 5.7771902691493295, 3.3053281136919193, 2.953766939903294, 7.523521418457351, 0.6114893682126263, 1.2308944709207983, -0.4022035990752544, 3.3398971926144605, 2.9744610304244508, 2.3923056490352455, 3.018952957630533, 0.389648438965132, 5.964028630745363, 0.17884731747487193}, 0.9555868778124081, 0.5505608649285845},
  {{-3.584303523183441, -2.7017395489596687, -1.082733795677032, -0.8460953677762504, 1.8401872734932558, -4.34175937299949, 1.9869898976784093, -1.912827526430391, -4.382386568611225, 1.4358922181945166, 2.3063441629875356, -2.015350214016216, -2.0629498572964797, -0.7094535115865819, -0.8316635426083883, -3.8609853604734456, 3.4264445653522664, 4.4541487875943115, 1.7366181446483768, 3.008156516282396}, 0.9416577883714146, 0.2576711459739811},
  {{3.199074075426991, 1.173252909667182, 2.19180205171139, 4.634412122940081, 5.575308838558104, 2.3077839113629715, 4.068072019092217, 3.6959966097569925, 6.021836412908893, 3.9451655658348033, 4.170973390315266, 3.819427880121374, 2.7954038115113082, 2.2495560618983728, 3.4928070611146222, 0.2651009432724787, 3.5484096381202006, 3.726135084727019, 1.5638829073404787, 2.9197637573036728, 4.767959135877868, 2.072746624282265, 2.231355021377078, 5.429376424659405, -0.48479749957003415}, 0.979654168247142, 0.878165815211185},
  {{0.988121270542924, 1.1943849060106684, 0.7273808361421276, 0.6705195221741904, 0.5801444087817779, 1.163282708571334, 0.6039736410654559, 0.8929935145774585, 0.48877537351577266, 0.27600454292233273, 1.535112158286416, 1.5886255713193562, 1.1314575603286905, 1.4082821702352086, 0.8756703380047637, 2.0763531634277372, 2.671789861147518, 1.5712117101809377, 3.918931853511752, 1.4844569435550967, 0.692911320608815, 1.0079645596974254, 1.0217829850731017, 1.2362917385276087, 0.9404626029865171, 0.8060970361302269, 0.7031995936690955, 0.7954915171487081, 2.882710606072984, 0.31243894720800713}, 0.8210441298251863, 0.00016253175329322074},
  {{1.1000783048885003, 1.5335966705030335, 4.490870190667431, 3.281425970793537, 0.8661613953809613, 1.9877873667525292, 2.1018838939630253, -1.0897658584942578, 0.38586159718094404, 5.3211880518980825, 0.6209430321906062, 1.2697858646432991, 1.2696317661353407, 1.149122573530867, 3.73674608348938, 3.0828023135860616, 4.116616743039617, 1.7701979112539192, 2.138083971050091, 4.422860624946309, -0.7307221969857456, 3.731290426285746, 5.413606998326918, 5.108838712979936, 1.5815347548503962, 5.334291081975477, 3.021853546363814, 1.125684271920793, 2.437000887592476, 2.4345488544543983, 4.758764972006741, -0.6768105838774798, 2.9415966357712158, 2.662131288630161, 4.871622575328532}, 0.9639086513622873, 0.29853600357893717},
  {{2.648300090849216, 0.04700920083904103, 4.021475994756271, 2.2366491556772767, 5.621044390557896, 2.2175562909247946, -0.9412197221613336, 2.7011099335527344, 2.8021942415018852, 3.0879173410542284, 2.232377772814002, 8.169621858787254, -0.2515483233486737, 5.834376879606826, 4.851012863120504, 2.1981716845180603, 2.5514771438234836, 3.9502983077189473, 2.05023351611346, 1.8572018569640105, 1.3619494415382112, 0.17395725233178316, 3.3485105869964844, 2.8402321354847597, 3.0258802299764636, 4.667523142350339, 4.7453442200274, 3.0079950509952034, 4.798515327543653, 3.5161922643710133, 4.606464256983902, 4.40508597689154, 2.7005103354390214, 2.858803075666004, 1.594631193327496, 3.333020150789909, 4.969119928963351, 4.897139990821378, 4.600499674463439, 0.019086815042214322}, 0.9708140282309562, 0.38178384417343364},
  {{1.9993408567750484, 1.1699768253558398, -3.5350190670656234, -2.6111510715991937, 1.6076601285406458, 3.7681033346249535, 0.09166208750359495, 0.009304270403834636, -3.5685898737546085, -2.0563497123124463, 3.7987804775480516, 0.863181324207865, -4.899727942739769, -4.488911209444417, 1.6322930625771388, 2.0368997637834427, 2.4816802062466206, 4.463222689300263, 2.664527397701912, 2.905077006504703, 4.716598336368863, 3.1086530596477537, -2.2194183747599205, 4.342766033929394, -2.923492277283187, 1.4580102182967716, 0.98433605066817, 4.47855304861003, 1.044741516508716, -2.9273093873889144, -0.7932269660199633, -0.045400604710744474, -3.1339361881759342, 2.3057067078129867, -2.5477941829521846, -4.935209428979341, 3.7109642906080076, -1.771650169376663, 3.707599811645231, 4.097455932719589, 1.8064803767337603, -3.133083025689427, -1.656738167104411, 2.7400809474345733, 0.8414920377190613}, 0.9350618268974069, 0.01421749613940842},
  {{0.2584924525608506, 0.9579302681493025, 0.3256823737103648, 2.2609549163130684, 0.39589525390467817, 0.7351639229967325, 1.8986408832152202, 0.3813783893440752, 0.27656064859328294, 1.028390047991959, 1.1335822613940294, 1.4606524246131447, 4.019220040931404, 1.5971720346287765, 4.075792725283785, 0.4414048664338177, 1.0586233298509058, 1.0123657224323863, 1.016147516726896, 0.44530723713043036, 1.2198294854128675, 3.2276507979078453, 0.4956948284470507, 1.7237311435267457, 0.6174476509317247, 0.15442887337572295, 1.6762520626759896, 1.3343252137419999, 1.001208782159585, 4.35149165990565, 1.4098684777921344, 0.20342950029635118, 3.3513560615440596, 2.244481993667047, 3.0369536150427394, 0.14595978834459464, 2.012163484086511, 0.8157042300617806, 3.3210778673035257, 1.5796188400640285, 1.3784334538565226, 1.3101393011205433, 0.9319587579826635, 1.2156839771848766, 0.9140809996366289, 0.7411125961873486, 0.6124916896156887, 0.9049567705093343, 1.5894987681453667, 1.2960035713297517}, 0.8632997171305861, 3.6175806382048115e-05},
};

struct KruskalCase {
  std::vector<std::vector<double>> groups;
  double h;
  double p;
};

inline const std::vector<KruskalCase> kruskal_cases = {
  {{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}, {7.0, 8.0, 9.0}}, 7.200000000000003, 0.02732372244729252},
  {{{1.0}, {2.0}}, 1.0, 0.31731050786291115},
  {{{1.0, 2.0, 2.0, 3.0}, {2.0, 3.0, 4.0}, {5.0, 5.0, 6.0}}, 6.752358490566031, 0.034177790539894025},
  {{{2.5, -1.1, 1.7, 0.9, 0.3, 2.6}, {0.8155408904329483, 0.5562215409981224, 0.5223076564826266, 1.8136516652474857, 0.07912567048748587, 2.3506629471138036}, {-1.2, 1.0, -1.8, 0.9, -0.4, -0.3, 0.7}}, 3.452840837827667, 0.17792015105522696},
  {{{1.4928376866449737, 0.006586879208973051, 0.5352542010056647, -0.6689883763402459, 0.9892736602872932, -1.302173397941279, -0.7180026193678636, 0.10744073286239339, -0.17395982103850083, -0.43521320421859344}, {-1.7280170889494186, -0.7217555658263546, -2.711107075090786, -0.8339513262692513, -0.26396527147605453, -0.33532981730735967, -0.8096513194380572, -1.7570193324876433, 0.7807395686193375, -0.6501070206614571}, {1.6540238465387842, -0.7655604967836411, -0.3574713618526524, -0.5151214716344428, -1.4574420369173133}, {0.23138485916932022, 1.50292106837853, 1.3359760914944874, 2.0494626096629096, 0.7126625345638384}, {-0.8, -0.5, 0.8, 0.5, -0.2, 0.6, 1.3, 0.2, 0.9}}, 14.630341880341888, 0.005532645043857194},
  {{{1.2643754437630306, -0.7238755966717435, -1.8374878386388345, 1.3625924384390231, -0.33753935953576214, 1.378779094487562, -0.18135422678363902, -1.9329226459287054}, {-1.1304667795916112, 0.9855013290848327, 0.9949038081457335, -0.5018150256329847}, {1.3684410689116664, 2.9499431840046784, 0.9804892580911112, 0.8822210858971118, -0.5093054058982136, 1.6252979083027612}, {-0.9291485249244279, 1.0199396531274825, 0.8353825935545697, 1.3953444648638438, 0.15658817373116551, -0.5411132556582556, -0.32008574290507386, -1.888294788201903, 0.42711415780547857, -0.13669562972091512, -0.49061825305563317}, {-0.9, -1.9, 1.0, 0.5, -2.5, -1.4, -1.0, 0.2, -2.0, -0.5}}, 8.684918414918428, 0.06947605384637007},
  {{{-0.8983344946505005, -1.827573174941396, 0.4329322854413795, -0.33406628005863587, -1.8249822760349086}, {2.357709856065795, 2.6359251372352808, 1.2190215285367767, -0.060322164586669724, 1.4313461047559728, 0.09978372389481882, 0.07702768224412737, -0.9983222715104161}}, 4.200000000000003, 0.04042397933690854},
  {{{0.3, -0.1, -0.1, -1.3, 0.4, -1.5, -1.0, 0.2}, {-1.7880916618016083, 0.6481591316774689, -1.086336599971496, 0.07475399352556875}, {0.7, -0.6, -1.4, 0.5, -1.1, 0.3, -0.8, -0.6, -1.1}, {-0.0, -2.9, 0.6, -1.2, -0.6, -0.8, -1.2, -0.8, -1.0, -0.6, -0.7}}, 0.8004516379539554, 0.8493590044939626},
  {{{0.6, -0.2, 3.8, 0.8, 1.0, -0.4, 0.3}, {-1.0391549043362764, -1.7927051378916816, -1.0556503590982094, -0.18305743842542843, -0.961209657853848, -0.5318369946633336, -0.9539090067882114, 0.795116578854554}, {0.3878281703442247, -0.6682954926750707, 0.2870585646457133, -0.6474196101631202, -0.17064372692955437}, {-3.3, -0.5, -0.0, -1.4, -0.1, 0.2, -0.0, -0.4, -0.2}}, 9.504560019719008, 0.02328289892722245},
};

struct DunnPair {
  int i;
  int j;
  double z;
  double p;
  double p_bonferroni;
};

struct DunnCase {
  std::vector<std::vector<double>> groups;
  std::vector<DunnPair> pairs;
};

inline const std::vector<DunnCase> dunn_cases = {
  {{{1.0, 2.0, 3.0}, {7.0, 8.0, 9.0}}, {{0, 1, -1.9639610121239317, 0.04953461343562668, 0.04953461343562668}}},
  {{{-2.0, 2.4, 0.3, -0.9, -0.7, -1.7, -2.5, 0.8, 0.1, -1.1, 0.0}, {1.9199441823865389, 1.947821123485758, 2.502170413084618, 1.991822481132567, 2.0816795601823976, 2.5069035010764065, 2.183705468229104, 1.1923948489770124, 0.7707766716390634, 1.4319316549045684, 1.9266363176794878}}, {{0, 1, -3.316083044089824, 0.0009128869759883774, 0.0009128869759883774}}},
  {{{2.6732527722616934, 2.1405097054043614, 1.5288292180167082, 1.643470858028407, 3.312050565242356, 3.7333512439729892, 2.1789413604543464, 1.8592057125482142, 2.3234050315985595, 1.2413105265030717, 0.889423687161961, 1.9090575760313926}, {-0.6492006540301417, 0.05545022150712305, -0.1945321626664146, 1.2343284862650112, 0.1998219646975696, -0.8092507330159809, 0.33886967900646225, 0.08222005319733523, 1.3948155104582847, 0.35467326651931075, 0.3011413027770897}}, {{0, 1, 3.877381965848981, 0.00010558652373022588, 0.00010558652373022588}}},
  {{{1.8, 1.1, 1.1, 3.2, 1.2, 0.6, 2.3, 1.8, 0.1, 0.4}, {2.4, 1.7, 2.1, 1.7, 0.6, 0.9, 2.1, 2.1}, {0.3, -2.6, -0.1, -1.4}}, {{0, 1, -0.8012784618213015, 0.42297045685147117, 1.0}, {0, 2, 2.504584565495349, 0.012259529452841268, 0.0367785883585238}, {1, 2, 3.0403261964140045, 0.0023632204484550006, 0.007089661345365002}}},
  {{{-2.831545018582559, -2.2512894303779065, -3.4811444712545474, -0.9920222125842938, -1.6396351148764066, -3.311280189675406}, {-0.285371185661349, -1.0257089925781173, -0.4126948870588915, -0.5041062951496884, 0.14826976406315662, 0.8941291837140641, -1.6305956268199078, -0.9275816684967575, -2.1036828539960046, -0.32276444652672664}, {0.16876543243994035, -2.011678427822858, -0.702778637517619, -1.6529486599906582, -0.22087660146275503, -2.15825414409134}}, {{0, 1, -2.8728145156112532, 0.0040683289848213655, 0.012204986954464096}, {0, 2, -1.9115831652398645, 0.055929680325112155, 0.16778904097533648}, {1, 2, 0.7355995645509784, 0.46197442766872876, 1.0}}},
  {{{-0.8, -0.5, -1.6, -0.9, -1.0, -2.3, -1.5, 0.4}, {2.1, 1.7, 0.6, 2.1, 0.2}}, {{0, 1, -2.7851435857758626, 0.005350402451453819, 0.005350402451453819}}},
  {{{0.7178289545454408, 2.252319167281119, 1.1012117835612942, -0.4113844140648857, -1.0133124257186716, 0.39372893739716824, 0.2490497127341726, -0.9738854113441104}, {2.9, 0.9, 2.8, 1.6}}, {{0, 1, -2.2079402165819615, 0.027248440892305936, 0.027248440892305936}}},
  {{{0.9, 0.5, 1.6, 1.2, 0.8, 1.0}, {-1.375260016500055, 2.127486318345977, 0.707329134288049, 2.2676137873810327, 2.0026150665607463, 1.4030844581355941, 0.8409038241861014}}, {{0, 1, -0.7142857142857143, 0.475050524053953, 0.475050524053953}}},
  {{{2.1, 1.5, 3.3, 2.2, 3.0, 1.8, 2.1}, {0.9, 2.1, -0.1, 0.1, -0.0, 0.8, 1.0, 0.4, 0.5, -0.3, 0.1, 1.4}, {-2.064601997217209, -1.930695629868118, -0.6627556263835901, -0.8511709776349552, -2.6120201572319646, -2.098480085989793, -2.3816511558208386, 0.09125108232000123, -0.7698786440310421, -1.4728137391797242, -1.5345739877895528, 0.5127439252525479}}, {{0, 1, 2.2338715982682795, 0.0254915228202233, 0.07647456846066991}, {0, 2, 4.682591513016123, 2.8327065548937653e-06, 8.498119664681297e-06}, {1, 2, 2.852672371113131, 0.0043353293171296365, 0.013005987951388909}}},
  {{{-3.2, -0.3, -1.4, 0.5}, {2.0736397479119697, 3.8038521970428025, 2.145500644355581, 3.496344073586377, 1.1242979987944404, 1.6338314343991478, 1.6310071400170916}, {2.5784963104711918, 1.4024912685885003, 4.512556723100706, -1.6869740005567415, 0.7565215945352062, 0.7806765853271144, 1.4336480210018139, -0.6937164106738911}}, {{0, 1, -2.9060652626885006, 0.0036600510221013382, 0.010980153066304014}, {0, 2, -1.7048691877585274, 0.08821882411821265, 0.26465647235463796}, {1, 2, 1.5021913817381662, 0.13304768992685517, 0.3991430697805655}}},
  {{{3.6, 3.0, 0.3, 1.3, 0.9, 1.7}, {2.387763871651373, 1.647880903375258, 2.4888356580185746, -0.09533134886554384, 0.020205943699977302, -0.2007148068781337, 4.142986138185641, 0.23883059497140946, 0.9573097918526539, 1.40025058683837, 1.2321654487641533}, {0.6, 0.1, -2.7, -1.3, -1.1, 0.3, -0.6, 0.7, 0.4, -0.1, 0.7, -0.2}, {0.6, 0.3, 3.3, 0.4}}, {{0, 1, 0.9360403258455802, 0.3492524255060635, 1.0}, {0, 2, 3.035356993342965, 0.0024025112759267714, 0.014415067655560629}, {0, 3, 0.8416146435860521, 0.40000368990098745, 1.0}, {1, 2, 2.497750855716201, 0.012498400028422852, 0.07499040017053711}, {1, 3, 0.1168084844653178, 0.9070118201512231, 1.0}, {2, 3, -1.6877424888309263, 0.09146067177237308, 0.5487640306342385}}},
  {{{0.27422264045490247, -0.34238735628476524, 0.05588999959220203, 1.1531455011476266}, {1.7994311384734996, -1.0843753422018199, 1.0446929325536736, 1.6045930862416795, 1.5459739032987163}, {-0.5612335307933548, 1.970087109660851, -2.156595184901092, -0.9350446146944835, -2.822620292827116, 2.2542618942213624, -0.078988049137596}}, {{0, 1, -0.5949130765308921, 0.5519015758889672, 1.0}, {0, 2, 0.45479366790522935, 0.6492576861432146, 1.0}, {1, 2, 1.1683860879093726, 0.24265106408561898, 0.727953192256857}}},
  {{{1.1, 1.5, 0.1, 0.7, -0.3}, {1.0, 1.6, -0.8, 1.2, -0.2, 0.4, 0.9, 0.3, 0.2, 0.8, 1.1, 1.2}, {-1.9, -1.9, -2.9, -1.8, -0.4, -4.1}, {1.2, -1.2, -0.3, -0.1}, {-0.4292272383509226, -2.5184110816046266, -0.46613189472085614, -3.1405140698604876, -1.4555022310273222, -2.3763163644583694, -1.4559124725396841}}, {{0, 1, -0.08965908114763793, 0.9285581334410254, 1.0}, {0, 2, 2.9424166676091965, 0.003256614213272641, 0.03256614213272641}, {0, 3, 0.7526261760698171, 0.4516745833745166, 1.0}, {0, 4, 2.7895691457425182, 0.005277822516013554, 0.052778225160135535}, {1, 2, 3.658892926938482, 0.00025330713812531433, 0.0025330713812531432}, {1, 3, 0.9571341822155197, 0.3384995324956458, 1.0}, {1, 4, 3.534792428647251, 0.00040809559794388893, 0.004080955979438889}, {2, 3, -1.978079436308741, 0.047919746001009886, 0.4791974600100989}, {2, 4, -0.26659062805002787, 0.7897843723018954, 1.0}, {3, 4, 1.800506946194848, 0.07178062777505886, 0.7178062777505887}}},
  {{{1.4505064990904168, 1.7990395174442813, 0.32139119151844225, -0.488799680962105, -0.4745481325444767, 0.6097216739965106, 2.6025721271478575, -0.9390949000817497, 1.1180690907633393, 0.7867420198719746, -0.19781204018707077, 1.485826836906752}, {1.4, 1.3, 3.3, 0.8, -0.2, 1.1, 1.4, 0.7, 0.6, 0.4, 1.2}, {-0.5, 1.2, 1.7, 0.9, 1.8, 2.1, 0.6}, {0.7058861351412336, 0.273405015793458, 0.049109144550146255, -0.8537026600529581, -0.8291151315614176, -0.3475788415394492, -0.8402960150612713, -0.28402962617503663, -1.499850463031418, 0.2056409467469631, -1.1855986816532003, -1.625119229274904}}, {{0, 1, -0.7708526734039586, 0.440794261834191, 1.0}, {0, 2, -0.9325761399623221, 0.351038857439941, 1.0}, {0, 3, 2.69583890737036, 0.007021161308637429, 0.04212696785182457}, {1, 2, -0.2518261166924992, 0.8011754695203637, 1.0}, {1, 3, 3.4074351379065586, 0.0006557649221799685, 0.003934589533079812}, {2, 3, 3.24667098179443, 0.001167632881347365, 0.0070057972880841896}}},
  {{{-0.10247565830219951, 2.266837984283308, 2.054290814782801, 1.1586575383143827, 0.8218399621571807, 1.249009807946299, -0.4098687098586753, 1.098300893375871, 1.515453908468297, -0.07866766406898096, 0.7694517623649786, 0.5403914724374742}, {1.7472781234308379, 1.862715555679415, 2.4288139058708764, 4.066086589862133, 1.8955792128464328, 2.2420346384390806, 2.7683546174722933, 1.8066039696767096, 3.2955328988828496, 2.3345552528821525, 2.400337403095096, 2.3010622464973403}, {-0.4066318505293266, -1.2182782134237182, 0.502648508598856, -0.9121337118128157, -0.8337985268449783, 0.28523771436061995, -0.4072983848755709, -1.2808049366089629, 0.15822458314564614, -2.093884025914009, -0.4800283051591067}, {-1.1220960404891351, -0.03928767480891604, -1.4922016925949992, -1.2298866192711913, -1.8481924728947363, -0.05374689747771322, -0.42706097204829196, 0.1157594319502262}}, {{0, 1, -2.373434723982596, 0.01762350783286262, 0.10574104699717571}, {0, 2, 2.4701381097269515, 0.01350608970586123, 0.08103653823516738}, {0, 3, 2.5009089256799126, 0.01238750298597264, 0.07432501791583584}, {1, 2, 4.791403062460413, 1.6561903427919976e-06, 9.937142056751985e-06}, {1, 3, 4.623773478873328, 3.7682136378059552e-06, 2.2609281826835733e-05}, {2, 3, 0.23761384998710858, 0.8121806074063015, 1.0}}},
  {{{-0.0813273825896601, -0.837455653638959, -0.7816685001231707, -1.7314491959476863, -2.050253326190894, -1.3183928609646538}, {-1.0, -0.1, -2.6, 0.2, -0.5, -2.0, -2.3}, {-0.4, -2.5, -2.6, -0.6, -1.1, -4.0}, {-1.2, -0.6, -1.6, -0.8, -2.3, -3.0}, {-0.4, 0.7, 2.5, 0.3, 2.6, 1.0, 1.3, -1.1}}, {{0, 1, -0.044277122491399035, 0.9646835073937514, 1.0}, {0, 2, 0.7167972475038544, 0.47349921034799725, 1.0}, {0, 3, 0.6271975915658726, 0.5305297217649794, 1.0}, {0, 4, -2.3547406732229095, 0.018535636217376927, 0.18535636217376927}, {1, 2, 0.7881327803469054, 0.4306190427587172, 1.0}, {1, 3, 0.6951508231149671, 0.48696078723007163, 1.0}, {1, 4, -2.409571623680868, 0.015971260833254973, 0.15971260833254974}, {2, 3, -0.0895996559379818, 0.9286053578300932, 1.0}, {2, 4, -3.1210291634920595, 0.001802201854962921, 0.01802201854962921}, {3, 4, -3.025243102208416, 0.0024843335454887493, 0.024843335454887493}}},
  {{{-0.8, -0.3, 1.0, 2.0, 0.4, 1.9, 0.5, -0.0, 0.5, 2.2, 1.9, 2.2}, {-0.7, -0.5, 2.0, 1.6, -1.1, 1.5, 2.4, 1.9}, {0.5, -0.0, -0.8, -1.2, -0.7, -0.6}}, {{0, 1, 0.28708462588160727, 0.7740475236975638, 1.0}, {0, 2, 2.3477212489084627, 0.018888651346590544, 0.056665954039771635}, {1, 2, 1.9309367278715874, 0.05349087749832845, 0.16047263249498533}}},
  {{{1.6204491307717557, -0.10162865954215436, -1.4270477323328352, -1.1507956338112042, -0.5586852417907372}, {-2.2246701854788613, -2.186499691706734, -0.9874444359835635, -2.522753033551095}, {1.8943320891224509, 0.9114664276315464, 2.34719265549299, -0.5806903489888442, 1.164291323391768, 0.0377947461425282}}, {{0, 1, 1.5999999999999999, 0.109598583399116, 0.328795750197348}, {0, 2, -1.3663155498705932, 0.17183994239922906, 0.5155198271976872}, {1, 2, -2.9444863728670914, 0.0032349119169146883, 0.009704735750744065}}},
  {{{-2.6, -1.5, -1.7, -1.1, -1.4, -0.1, -1.0, -0.9, -1.9, -1.1}, {-1.1, 0.0, -1.4, -0.3, -0.6}, {-1.3, -1.5, -1.3, 0.3, -0.2, -0.7, -1.3, -0.3}, {-0.2, -0.6, -1.5, -0.7, -0.3, -0.6, -0.8, -1.1, -0.6, -0.3, -0.2}, {1.2204805180985114, 2.5250093875009556, 2.1045769021327043, 0.8733113216984989, 2.2536712523146414, 3.6312827271576187, 0.6346879285452389}}, {{0, 1, -1.458312721585214, 0.1447543652717524, 1.0}, {0, 2, -1.247507327699873, 0.21221153508790558, 1.0}, {0, 3, -2.0003726397131993, 0.04546004053142081, 0.4546004053142081}, {0, 4, -4.573948274604343, 4.786180470087589e-06, 4.786180470087589e-05}, {1, 2, 0.36311270346617813, 0.7165206953627239, 1.0}, {1, 3, -0.13956347775542807, 0.8890048986615978, 1.0}, {1, 4, -2.485424457195174, 0.012939704723652676, 0.12939704723652676}, {2, 3, -0.6074999309659209, 0.5435191884378825, 1.0}, {2, 4, -3.211910546686513, 0.001318554243496663, 0.01318554243496663}, {3, 4, -2.8543089178277548, 0.004313056907984729, 0.04313056907984729}}},
  {{{2.0, 0.4, 0.2, -0.1, -0.6, 0.2, 2.6}, {1.5, 2.0, 1.2, 1.4, -1.9, 1.1, 1.5, 0.4, 0.9, -0.1}, {0.5483316983400999, 1.044879368651593, 0.360483911570477, 1.7143411077075914, 1.0361348381271482, 1.5170628730358842, 2.522454173796136, 0.19812157595384927}, {1.0, -1.3, -0.8, -0.7, -0.3}}, {{0, 1, -0.6045794959334204, 0.5454584338688089, 1.0}, {0, 2, -0.9215503014529183, 0.3567631919592039, 1.0}, {0, 3, 1.655428838361846, 0.09783754024692745, 0.5870252414815647}, {1, 2, -0.3773810820232543, 0.7058904237273096, 1.0}, {1, 3, 2.3136894501134857, 0.020684763008895313, 0.12410857805337189}, {2, 3, 2.536920961124861, 0.011183219968002412, 0.06709931980801448}}},
  {{{2.5, 1.0, -0.3, 0.1, 1.0, 2.3, 1.7, 2.1, 0.5, 3.7}, {1.4, 1.8, 1.5, 0.9, 1.5}, {2.4, -0.5, 0.7, 2.6}}, {{0, 1, 0.09741834487998832, 0.9223941769113476, 1.0}, {0, 2, 0.030063953925489207, 0.9760160483283549, 1.0}, {1, 2, -0.053027830342765675, 0.9577097334962064, 1.0}}},
};

}  // namespace fixtures
