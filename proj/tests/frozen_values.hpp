// Generated by tests/oracles/freeze_values.py. Do not edit by hand.
#pragma once

#include <array>
#include <utility>

namespace casimir::frozen {

inline constexpr std::array<std::pair<double, double>, 50> kZetaNegative{{
    {-9.6715952986076434428, -0.0050482326959522187034},
    {-1.309562776721284294, -0.04246980953827203113},
    {-0.68952248083846967575, -0.14900313879652293516},
    {-7.2312880165289854517, 0.0040699862345395542359},
    {-7.2167652127870294265, 0.0040920399311385376197},
    {-3.4857319402165760636, 0.0045714327425133113377},
    {-4.3756468616521493331, -0.0025123605123748543652},
    {-5.5816662586909941979, -0.0022989804130271417909},
    {-7.025082095166079732, 0.0041819126584328542904},
    {-1.5279282183818754248, -0.023401856456888094849},
    {-4.0546314347987530979, -0.00042731833050153769426},
    {-5.5720020590429655272, -0.0023448667063207640916},
    {-2.3882727174631561695, 0.0075942575285368912105},
    {-4.6299643959375869073, -0.0035458995449913832283},
    {-3.6825216127499595942, 0.0027593552579396772255},
    {-1.4241392237767449558, -0.031643473218711355896},
    {-7.0691284646226426602, 0.0041938535731999811295},
    {-1.6371225681499677052, -0.016122390437973943951},
    {-9.5026791370170649031, -0.0066523124297353033335},
    {-0.60224279527334445561, -0.17390907479727188222},
    {-2.5408208093183093368, 0.0087450903050077655699},
    {-0.5697651835731001313, -0.18409768892326677858},
    {-0.87218682958693527496, -0.10666203040470178561},
    {-2.1953312287820523352, 0.0047907029054890501992},
    {-0.20741420197656168511, -0.34515899667878530864},
    {-8.383732437290884576, -0.0033984404451794632415},
    {-9.4430615800300419238, -0.0070535424433781303681},
    {-5.8415396289791834405, -0.00092286832206786345908},
    {-9.1253557606437105676, -0.0078307723188877673994},
    {-5.7399279478641931362, -0.0014889094155452346784},
    {-9.2386294423766557316, -0.0078034934574313140258},
    {-3.5757900453393718365, 0.0037434733862216810276},
    {-9.2200332297193785536, -0.0078259610181689060028},
    {-9.0413850442233503202, -0.0076908296579184830986},
    {-8.5335134855461465264, -0.0046987445404193464241},
    {-7.9611673624446774866, 0.00031901207256693687604},
    {-4.7576677224183061554, -0.0038372383212850547207},
    {-6.2383616706061690849, 0.0013892894210431309468},
    {-7.3721670505790495298, 0.0037426771349421845189},
    {-8.8154116915276219402, -0.0067386470376970992051},
    {-4.554089840911458964, -0.0032998400676328359741},
    {-8.1866268768596981431, -0.0016217100558726684956},
    {-1.2246558367527065059, -0.051832864299803109281},
    {-4.9759354502159771627, -0.0039794423692211183971},
    {-9.8684988857935938, -0.0023121580072951302279},
    {-6.3417994319692567728, 0.0019577696440299494678},
    {-4.2055603971498243254, -0.001505537251012779959},
    {-9.2977904902309713719, -0.0076828220552900755445},
    {-6.734436036856022767, 0.0036541106472635516089},
    {-9.6643326740032478028, -0.0051314901327486124777},
}};

inline constexpr std::array<std::pair<double, double>, 23> kZetaGrid{{
    {-9.75, -0.0040683492956482695561},
    {-7.5, 0.0032690395726002200217},
    {-5.25, -0.0035570039335310483106},
    {-3.5, 0.0044410113354794319585},
    {-2.5, 0.0085169287778503305424},
    {-1.5, -0.02548520188983303595},
    {-0.5, -0.20788622497735456602},
    {-0.25, -0.32045126422857728279},
    {0.25, -0.81327840526189165652},
    {0.5, -1.4603545088095868129},
    {0.75, -3.4412853869452228944},
    {0.99899999999999999911, -999.42285715578790183},
    {1.0009999999999998899, 1000.5772884760116268},
    {1.25, 4.5951118258429433807},
    {1.5, 2.6123753486854883433},
    {2.5, 1.3414872572509171798},
    {3.0, 1.2020569031595942854},
    {4.5, 1.054707510761454264},
    {7.0, 1.0083492773819228268},
    {11.5, 1.0003486558834917599},
    {17.0, 1.0000076371976378998},
    {23.5, 1.0000000842998368482},
    {30.0, 1.0000000009313274324},
}};

inline constexpr std::array<std::pair<double, double>, 8> kGammaQuadrature{{
    {7.3, 1271.4236336639092731},
    {0.10000000000000000555, 9.5135076986687312858},
    {0.36999999999999999556, 2.4035500200786532783},
    {1.5, 0.88622692545275801365},
    {2.75, 1.6083594219855456592},
    {12.25, 73711509.046769949091},
    {19.899999999999998579, 90406140079547518.549},
    {29.5, 1634812519827426644400000000000.0},
}};

struct FrozenBernoulli { int n; const char* numerator; const char* denominator; };
inline constexpr std::array<FrozenBernoulli, 6> kBernoulli{{
    {0, "1", "1"},
    {1, "-1", "2"},
    {2, "1", "6"},
    {12, "-691", "2730"},
    {30, "8615841276005", "14322"},
    {64, "-106783830147866529886385444979142647942017", "510"},
}};

struct FrozenSinSum { double eps; double theta; double value; };
inline constexpr std::array<FrozenSinSum, 9> kCutoffSinSum{{
    {0.05, 0.3, 1.6048762503487670786},
    {0.05, 1.0, 0.32076311880402295798},
    {0.05, 2.5, -0.66815789455277360293},
    {0.1, 0.3, 1.5713447442742217315},
    {0.1, 1.0, 0.31991583719132275813},
    {0.1, 2.5, -0.66468076016916825074},
    {0.5, 0.3, 0.93394061841674791632},
    {0.5, 1.0, 0.29450493809478934621},
    {0.5, 2.5, -0.56810748143419741636},
}};

inline constexpr std::array<std::pair<double, double>, 2> kCutoffLinearSum{{
    {1.0, 0.92067359420779231895},
    {0.01, 9999.9166670833316799},
}};

}  // namespace casimir::frozen
