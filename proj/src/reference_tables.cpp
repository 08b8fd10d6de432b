#include "slipflow/reference_tables.hpp"

#include <array>

namespace slipflow {

namespace {

constexpr double a1 = 65.0 / 64.0, a2 = 17.0 / 16.0, a3 = 5.0 / 4.0;

constexpr std::array<TableRow, 21> kNearCirc{{
    {a1, 1.0 / 64, .4170525380, .4170525625, .4170524896},
    {a1, 1.0 / 16, .4906779729, .4906782880, .4909655446},
    {a1, 1.0 / 4, .7851701838, .7851700411, .8350137728},
    {a1, 1.0, 1.963086617, 1.963085377, 1.963085489},
    {a1, 4.0, 6.674647535, 6.674645198, 6.675381808},
    {a1, 16.0, 25.52081497, 25.52081128, 25.51131048},
    {a1, 64.0, 100.9054563, 100.9054466, 100.9054478},
    {a2, 1.0 / 64, .4143605368, .4143493072, .4143493804},
    {a2, 1.0 / 16, .4879061200, .4878930227, .4878930894},
    {a2, 1.0 / 4, .7819440804, .7819247200, .7819248140},
    {a2, 1.0, 1.957301880, 1.957260968, 1.957261120},
    {a2, 4.0, 6.657144997, 6.657014853, 6.657015098},
    {a2, 16.0, 25.45536249, 25.45486728, 25.45486742},
    {a2, 64.0, 100.6478027, 100.6458431, 100.6458432},
    {a3, 1.0 / 64, .3825119944, .3807427556, .3807440330},
    {a3, 1.0 / 16, .4551128646, .4530404184, .4530434724},
    {a3, 1.0 / 4, .7437766793, .7406928885, .7406944966},
    {a3, 1.0, 1.888863782, 1.882275712, 1.882277797},
    {a3, 4.0, 6.450075877, 6.429038519, 6.429053564},
    {a3, 16.0, 24.68100694, 24.60087273, 24.60089638},
    {a3, 64.0, 97.59955268, 97.28234644, 97.28237296},
}};

constexpr std::array<TableRow, 18> kSmall{{
    {a1, 1.0 / 4, .7851858133, .7851702110, .8350137728},
    {a2, 1.0 / 4, .7821607512, .7819248090, .7819248140},
    {a3, 1.0 / 4, .7432200201, .7406928855, .7406944966},
    {2.0, 1.0 / 4, .4953609194, .4909982744, .4910897996},
    {4.0, 1.0 / 4, .2147581278, .2139371008, .2142092926},
    {16.0, 1.0 / 4, .4473378672e-1, .4463047672e-1, .4473097574e-1},
    {a1, 1.0 / 16, .4906792259, .4906780838, .4909655446},
    {a2, 1.0 / 16, .4879127252, .4878930761, .4878930894},
    {a3, 1.0 / 16, .4532504638, .4530404192, .4530434724},
    {2.0, 1.0 / 16, .2624399058, .2620398525, .2621170972},
    {4.0, 1.0 / 16, .9036181975e-1, .9023065471e-1, .9032360830e-1},
    {16.0, 1.0 / 16, .1348438275e-1, .1345885965e-1, .1348419675e-1},
    {a1, 1.0 / 64, .4170525792, .4170526698, .4170524896},
    {a2, 1.0 / 64, .4143507188, .4143493767, .4143493804},
    {a3, 1.0 / 64, .3807580746, .3807427560, .3807440330},
    {2.0, 1.0 / 64, .2042096524, .2041611381, .2041881644},
    {4.0, 1.0 / 64, .5926274272e-1, .5923472697e-1, .5926025316e-1},
    {16.0, 1.0 / 64, .5672031762e-2, .5665670014e-2, .5671955380e-2},
}};

constexpr std::array<TableRow, 18> kLarge{{
    {a1, 4.0, 6.282052744, 6.674647024, 6.675381808},
    {a2, 4.0, 6.265911941, 6.657014849, 6.657015098},
    {a3, 4.0, 6.056752387, 6.429038511, 6.429053564},
    {2.0, 4.0, 4.602060688, 4.869625399, 4.870154656},
    {4.0, 4.0, 2.449872080, 2.627235185, 2.627747294},
    {16.0, 4.0, .6168200091, .6676825774, .6691074764},
    {a1, 16.0, 25.12821097, 25.52081287, 25.51131048},
    {a2, 16.0, 25.06364776, 25.45486727, 25.45486742},
    {a3, 16.0, 24.22700955, 24.60087275, 24.60089638},
    {2.0, 16.0, 18.40824275, 18.69310262, 18.69427704},
    {4.0, 16.0, 9.799488320, 10.09964112, 10.10542728},
    {16.0, 16.0, 2.467280036, 2.656743920, 2.661123514},
    {a1, 64.0, 100.5128439, 100.9054480, 100.9054478},
    {a2, 64.0, 100.2545911, 100.6458431, 100.6458432},
    {a3, 64.0, 96.90803820, 97.28234641, 97.28237296},
    {2.0, 64.0, 73.63297100, 73.92334640, 73.92489450},
    {4.0, 64.0, 39.19795328, 39.57699513, 39.59760516},
    {16.0, 64.0, 9.869120146, 10.54995058, 10.55945235},
}};

constexpr std::array<RitzRow, 21> kRitz{{
    {0.1, .25, .027080, .026893, .0268994, .0268994},
    {0.1, .5, .131628, .131224, .1312286, .1312286},
    {0.1, .75, .313497, .313320, .3133204, .3133204},
    {0.2, .25, .042611, .041996, .0419990, .0419990},
    {0.2, .5, .184716, .183372, .1833741, .1833741},
    {0.2, .75, .414937, .414338, .4143388, .4143388},
    {0.5, .25, .071907, .086515, .0865169, .0865167},
    {0.5, .5, .343981, .338284, .3382847, .3382847},
    {0.5, .75, .719257, .716699, .7166986, .7166986},
    {1.0, .25, .143814, .159568, .1595802, .1595797},
    {1.0, .5, .509349, .594535, .5945397, .5945397},
    {1.0, .75, 1.004665, 1.219750, 1.2197505, 1.2197505},
    {2.0, .25, .287629, .304352, .3043838, .3043838},
    {2.0, .5, 1.018698, 1.105106, 1.1051201, 1.1051201},
    {2.0, .75, 2.009330, 2.224974, 2.2249748, 2.2249748},
    {5.0, .25, .719072, .736625, .7366869, .7366851},
    {5.0, .5, 2.546745, 2.634130, 2.6341541, 2.6341541},
    {5.0, .75, 5.023326, 5.239416, 5.2394175, 5.2394175},
    {10.0, .25, 1.438144, 1.456036, 1.4561139, 1.4561106},
    {10.0, .5, 5.093491, 5.181257, 5.1812861, 5.1812861},
    {10.0, .75, 10.046652, 10.262916, 10.2629186, 10.2629186},
}};

}  // namespace

std::span<const TableRow> near_circular_table() { return kNearCirc; }
std::span<const TableRow> small_beta_table() { return kSmall; }
std::span<const TableRow> large_beta_table() { return kLarge; }
std::span<const RitzRow> ritz_table() { return kRitz; }

bool f_entry_unreliable(double a, double beta) {
  if (a != a1) return false;
  return beta == 1.0 / 16 || beta == 1.0 / 4 || beta == 4.0 || beta == 16.0;
}

}  // namespace slipflow
