// Frozen expected values for the test suites.
//
// Values marked "independent" were computed with an unrelated
// arbitrary-precision implementation (mpmath, 140+ decimal digits) straight
// from the defining formulas; they share no code with this library.
#pragma once

namespace oracle {

// Lambda_n = (-1)^n sum (-1)^m A_{nm} log 2xi(2m); independent
inline constexpr const char* kLambda1 = "0.06917639577193572412227317164579951049971";
inline constexpr const char* kLambda2 = "0.2274542726734417609352703579915563342464";
inline constexpr const char* kLambda3 = "0.4567141334860165065533629765701982178203";
inline constexpr const char* kLambda5 = "0.9235817976775598338875486831265414223567";
inline constexpr const char* kLambda10 = "1.542381763959895245858979730670134621999";
inline constexpr const char* kLambda25 = "2.452143887693355830445600702914595505542";
inline constexpr const char* kLambda50 = "3.14487036192131246802806923799140194268";
inline constexpr const char* kLambda100 = "3.818729812571270954907862269504043772706";
inline constexpr const char* kLambda200 = "4.514493879487891538941685812283074356431";
inline constexpr const char* kLambda500 = "5.433259321305156618101309384739001345295";

// published 16-digit values for the slow suite
inline constexpr const char* kLambda10000 = "8.428662659671506";
inline constexpr const char* kLambda20000 = "9.120189975922122";

// log 2xi(2) = ln(pi/3), log 2xi(4) = ln(2 pi^2 / 15); independent
inline constexpr const char* kLog2Xi2 = "0.0461175971812904827481821144305330069998";
inline constexpr const char* kLog2Xi4 = "0.274556751156535591708082254015580647197";

// zeta(2) = pi^2/6, zeta(4) = pi^4/90; independent
inline constexpr const char* kZeta2 = "1.644934066848226436472415166646025189219";
inline constexpr const char* kZeta4 = "1.082323233711138191516003696541167902775";

// C = (gamma - ln pi - 1)/2 and Keiper's c = (gamma - ln 2pi - 1)/2; independent
inline constexpr const char* kConstC = "-0.7837571104739336567684576306353281403026";
inline constexpr const char* kConstKeiperC = "-1.13033070075390631147707369136441642434";

// log10(3 + 2 sqrt 2), the varpi peak value
inline constexpr double kVarpiPeak = 0.7655513706757261566;

// delta Lambda_1 = Lambda_1 - (ln 1 + C); independent
inline constexpr const char* kDelta1 = "0.8529335062458693808907308022811276508023";

// F_1(10) = (1/2) ln(10 * 8^3 / 9^4); independent
inline constexpr const char* kF1At10 = "-0.1239942956556620311944406737861261584497";

// ln(1/6), ln(1/30), ln(691/2730): |B_2|, |B_4|, |B_12|; independent
inline constexpr const char* kLnB2 = "-1.791759469228055000812477358380702272723";
inline constexpr const char* kLnB4 = "-3.401197381662155375413236691606889912249";
inline constexpr const char* kLnB12 = "-1.373917064411335519964318806792433070678";

// centered variant, n = 1, w~ = 1:
//   2/(sqrt10+1)^2 * (sqrt10+sqrt2)(2 sqrt10)/(sqrt10-sqrt2) * ln(pi/3); independent
inline constexpr const char* kCentered1W1 = "0.08815355832122739952985326582365456828916";

// full zero-sum value of Keiper's lambda_1 = 1 + gamma/2 - ln(4 pi)/2; independent
inline constexpr double kKeiperLambda1Full = 0.02309570896612103381;

// F_2(1/2 + 14.134725 i), principal branches; independent
inline constexpr double kF2FirstZeroRe = 0.0238262830069363015;
inline constexpr double kF2FirstZeroIm = 0.0650665933862116157;

// 2xi(2.5 + 0.3i) (= 2xi(-1.5 - 0.3i) by the functional equation); independent
inline constexpr double k2XiProbeRe = 1.08755323273267033716;
inline constexpr double k2XiProbeIm = 0.02997413390321784936;

// paper-reported remainders and averaged remainders (slow suite)
inline constexpr double kDelta10000 = 0.0020794;
inline constexpr double kNAvgDelta10000 = 0.27027;
inline constexpr double kNAvgDelta20000 = 0.23970;

}  // namespace oracle
