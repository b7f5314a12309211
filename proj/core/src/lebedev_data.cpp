#include "grid_data.hpp"

namespace hrtfup::detail {

static const LebedevRule kLebedevRule6[] = {
    {1, 0.16666666666666666, 0.0, 0.0},
};
static const LebedevRule kLebedevRule14[] = {
    {1, 0.06666666666666667, 0.0, 0.0},
    {3, 0.075, 0.0, 0.0},
};
static const LebedevRule kLebedevRule26[] = {
    {1, 0.04761904761904762, 0.0, 0.0},
    {2, 0.0380952380952381, 0.0, 0.0},
    {3, 0.03214285714285714, 0.0, 0.0},
};
static const LebedevRule kLebedevRule38[] = {
    {1, 0.009523809523809525, 0.0, 0.0},
    {3, 0.03214285714285714, 0.0, 0.0},
    {5, 0.02857142857142857, 0.4597008433809831, 0.0},
};
static const LebedevRule kLebedevRule50[] = {
    {1, 0.0126984126984127, 0.0, 0.0},
    {2, 0.02257495590828924, 0.0, 0.0},
    {3, 0.02109375, 0.0, 0.0},
    {4, 0.02017333553791887, 0.3015113445777636, 0.0},
};
static const LebedevRule kLebedevRule74[] = {
    {1, 0.00051306717973385, 0.0, 0.0},
    {2, 0.01660406956574204, 0.0, 0.0},
    {3, -0.02958603896103896, 0.0, 0.0},
    {4, 0.02657620708215946, 0.4803844614152614, 0.0},
    {5, 0.01652217099371571, 0.3207726489807764, 0.0},
};
static const LebedevRule kLebedevRule86[] = {
    {1, 0.01154401154401154, 0.0, 0.0},
    {3, 0.01194390908585628, 0.0, 0.0},
    {4, 0.0111105557106034, 0.3696028464541502, 0.0},
    {4, 0.01187650129453714, 0.6943540066026664, 0.0},
    {5, 0.01181230374690448, 0.3742430390903412, 0.0},
};
static const LebedevRule kLebedevRule110[] = {
    {1, 0.003828270494937162, 0.0, 0.0},
    {3, 0.009793737512487513, 0.0, 0.0},
    {4, 0.008211737283191111, 0.1851156353447362, 0.0},
    {4, 0.009942814891178103, 0.6904210483822922, 0.0},
    {4, 0.009595471336070962, 0.3956894730559419, 0.0},
    {5, 0.009694996361663029, 0.4783690288121502, 0.0},
};
static const LebedevRule kLebedevRule146[] = {
    {1, 0.0005996313688621381, 0.0, 0.0},
    {2, 0.007372999718620756, 0.0, 0.0},
    {3, 0.007210515360144488, 0.0, 0.0},
    {4, 0.007116355493117555, 0.6764410400114264, 0.0},
    {4, 0.006753829486314477, 0.4174961227965453, 0.0},
    {4, 0.007574394159054034, 0.1574676672039082, 0.0},
    {6, 0.006991087353303262, 0.1403553811713183, 0.4493328323269557},
};
static const LebedevRule kLebedevRule170[] = {
    {1, 0.005544842902037365, 0.0, 0.0},
    {2, 0.006071332770670752, 0.0, 0.0},
    {3, 0.006383674773515093, 0.0, 0.0},
    {4, 0.00518338758774779, 0.2551252621114134, 0.0},
    {4, 0.006317929009813725, 0.6743601460362766, 0.0},
    {4, 0.006201670006589077, 0.431891069671941, 0.0},
    {5, 0.005477143385137348, 0.2613931360335988, 0.0},
    {6, 0.005968383987681156, 0.4990453161796037, 0.1446630744325115},
};
static const LebedevRule kLebedevRule194[] = {
    {1, 0.001782340447244611, 0.0, 0.0},
    {2, 0.005716905949977102, 0.0, 0.0},
    {3, 0.005573383178848738, 0.0, 0.0},
    {4, 0.005608704082587997, 0.6712973442695226, 0.0},
    {4, 0.005158237711805383, 0.2892465627575439, 0.0},
    {4, 0.005518771467273614, 0.4446933178717437, 0.0},
    {4, 0.004106777028169394, 0.1299335447650067, 0.0},
    {5, 0.005051846064614808, 0.3457702197611283, 0.0},
    {6, 0.005530248916233094, 0.159041710538353, 0.8360360154824589},
};
static const LebedevRule kLebedevRule230[] = {
    {1, -0.05522639919727325, 0.0, 0.0},
    {3, 0.004450274607445226, 0.0, 0.0},
    {4, 0.004496841067921404, 0.4492044687397611, 0.0},
    {4, 0.00504915345047875, 0.2520419490210201, 0.0},
    {4, 0.003976408018051883, 0.6981906658447242, 0.0},
    {4, 0.004401400650381014, 0.658740524346096, 0.0},
    {4, 0.01724544350544401, 0.0403854405009766, 0.0},
    {5, 0.004231083095357343, 0.5823842309715584, 0.0},
    {5, 0.005198069864064399, 0.3545877390518688, 0.0},
    {6, 0.004695720972568883, 0.2272181808998187, 0.4864661535886647},
};
static const LebedevRule kLebedevRule266[] = {
    {1, -0.001313769127326952, 0.0, 0.0},
    {2, -0.002522728704859336, 0.0, 0.0},
    {3, 0.004186853881700583, 0.0, 0.0},
    {4, 0.005315167977810885, 0.7039373391585475, 0.0},
    {4, 0.004047142377086219, 0.1012526248572414, 0.0},
    {4, 0.00411248239440699, 0.4647448726420539, 0.0},
    {4, 0.003595584899758782, 0.3277420654971629, 0.0},
    {4, 0.004256131351428158, 0.6620338663699974, 0.0},
    {5, 0.00422958270064724, 0.8506508083520399, 0.0},
    {6, 0.004080914225780505, 0.3233484542692899, 0.1153112011009701},
    {6, 0.004071467593830964, 0.2314790158712601, 0.5244939240922365},
};
static const LebedevRule kLebedevRule302[] = {
    {1, 0.0008545911725128148, 0.0, 0.0},
    {3, 0.003599119285025571, 0.0, 0.0},
    {4, 0.003449788424305883, 0.3515640345570105, 0.0},
    {4, 0.003604822601419882, 0.6566329410219612, 0.0},
    {4, 0.003576729661743367, 0.4729054132581005, 0.0},
    {4, 0.002352101413689164, 0.0961830852261478, 0.0},
    {4, 0.003108953122413675, 0.2219645236294178, 0.0},
    {4, 0.003650045807677255, 0.7011766416089545, 0.0},
    {5, 0.002982344963171804, 0.2644152887060663, 0.0},
    {5, 0.00360082093221646, 0.5718955891878961, 0.0},
    {6, 0.003571540554273387, 0.2510034751770465, 0.8000727494073951},
    {6, 0.00339231220500617, 0.1233548532583327, 0.4127724083168531},
};
static const LebedevRule kLebedevRule350[] = {
    {1, 0.003006796749453936, 0.0, 0.0},
    {3, 0.003050627745650771, 0.0, 0.0},
    {4, 0.001621104600288991, 0.7068965463912316, 0.0},
    {4, 0.003005701484901752, 0.4794682625712025, 0.0},
    {4, 0.002990992529653774, 0.1927533154878019, 0.0},
    {4, 0.002982170644107595, 0.6930357961327123, 0.0},
    {4, 0.002721564237310992, 0.3608302115520091, 0.0},
    {4, 0.003033513795811141, 0.6498486161496169, 0.0},
    {5, 0.003007949555218533, 0.1932945013230339, 0.0},
    {5, 0.002881964603055307, 0.3800494919899303, 0.0},
    {6, 0.002958357626535696, 0.2899558825499574, 0.7934537856582315},
    {6, 0.003036020026407088, 0.0968412145510396, 0.8280801506686862},
    {6, 0.002832187403926303, 0.1833434647041659, 0.9074658265305127},
};

const LebedevRuleSet kLebedevRuleSets[] = {
    {1, 6, kLebedevRule6, 1},
    {2, 14, kLebedevRule14, 2},
    {3, 26, kLebedevRule26, 3},
    {4, 38, kLebedevRule38, 3},
    {5, 50, kLebedevRule50, 4},
    {6, 74, kLebedevRule74, 5},
    {7, 86, kLebedevRule86, 5},
    {8, 110, kLebedevRule110, 6},
    {9, 146, kLebedevRule146, 7},
    {10, 170, kLebedevRule170, 8},
    {11, 194, kLebedevRule194, 9},
    {12, 230, kLebedevRule230, 10},
    {13, 266, kLebedevRule266, 11},
    {14, 302, kLebedevRule302, 12},
    {15, 350, kLebedevRule350, 13},
};
const int kNumLebedevRuleSets = 15;
}  // namespace hrtfup::detail
