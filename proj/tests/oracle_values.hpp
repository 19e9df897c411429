#ifndef LOGINT_TESTS_ORACLE_VALUES_HPP
#define LOGINT_TESTS_ORACLE_VALUES_HPP

// Reference values frozen from an independent arbitrary-precision
// evaluation (mpmath 1.3, 90 significant digits working precision),
// computed before the library was built. Each constant is the correctly
// rounded decimal expansion of the quantity named.

namespace oracle {

inline constexpr const char* kLn10 =
    "2.302585092994045684017991454684364207601101488628772976033327900967573";
inline constexpr const char* kE =
    "2.718281828459045235360287471352662497757247093699959574966967627724077";
inline constexpr const char* kSqrt2 =
    "1.41421356237309504880168872420969807857";
inline constexpr const char* kGamma =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467";
inline constexpr const char* kMu =
    "1.451369234883381050283968485892027449493032283648015863093";

inline constexpr const char* kEi1 =
    "1.89511781635593675546652093433163426901706058173270759164623";
inline constexpr const char* kEiMinus1 =
    "-0.219383934395520273677163775460121649031047293406908207577979";
inline constexpr const char* kEiMinus35 = "-1.75270593899473720005483266909e-17";
inline constexpr const char* kLi2 =
    "1.04516378011749278484458888919461313652261557815120157583291";
inline constexpr const char* kLiHalf =
    "-0.378671043061087976727207184636560980551234040978213996944421";

inline constexpr const char* kLi1_5 = "0.1250649863152963559943500047955129365421";
inline constexpr const char* kLi3 = "2.163588594667191972876922367347721366542";
inline constexpr const char* kLi10 = "6.165599504787297937522981752669522749131";
inline constexpr const char* kLi100 = "30.1261415840796299259017413390321849796";
inline constexpr const char* kLi110 = "32.2750989120194937590650750757572595724";
inline constexpr const char* kLi1000 = "177.609657990152226687640623948699317978557703";
inline constexpr const char* kLi1270 = "216.009143118430476374930096197488361587549661";
inline constexpr const char* kLi1280 = "217.407607960837629004516646351043284870013418";
inline constexpr const char* kLi1e4 = "1246.13721589938845969277110752905979248653465";
inline constexpr const char* kLi5e4 = "5166.54676393749831500727720034380512696555838";
inline constexpr const char* kLi1e5 = "9629.80900105079820503425956058009495889766899";
inline constexpr const char* kLi2e5 = "18036.0521218970009136559056042747656365307953";
inline constexpr const char* kLi3e5 = "26086.6921920999400764980042386729138120726621";
inline constexpr const char* kLi4e5 = "33922.621925543995138881168704837862812760997";
inline constexpr const char* kLi5e5 = "41606.2887864326182500364217137269591230790919";
inline constexpr const char* kLi1e6 = "78627.5491594621819198629107479472611613218744";
inline constexpr const char* kLi1e7 = "664918.405048568912329212886601195793153326595";

// increments of li
inline constexpr const char* kLi110Minus100 = "2.14895732793986383316333373673";
inline constexpr const char* kLiDelta1e5To2e5 = "8406.24312084620270862164604369";

// sine/cosine integrals
inline constexpr const char* kSi1 = "0.9460830703671830149413533138231796578123";
inline constexpr const char* kCi1 = "0.3374039229009681346626462038891507699976";
inline constexpr const char* kSiPi = "1.851937051982466170361053370157991363346";
inline constexpr const char* kCiPi = "0.07366791204642548599010096523014967186988";
inline constexpr const char* kSi01 = "0.09994446110827695016059211855419093043179";
inline constexpr const char* kCi01 = "-1.727868386657296638997725152906573632828";

// complex exponential integral at 3+4i (principal branch)
inline constexpr const char* kEi3p4iRe = "-4.154091651642689822535359302871661650484";
inline constexpr const char* kEi3p4iIm = "4.294418620024357476985535360918782029895";

// Mobius-weighted li series at 1e6 (terminates at n = 19)
inline constexpr const char* kRiemannR1e6 = "78527.34662052740415164663";
// n/ln n * 10^(1/(2 ln n)) at 1e6, natural logs
inline constexpr const char* kEncke1e6 = "78672.73851089474464747193";
// sum_{2<=n<=x} 1/ln n
inline constexpr const char* kDiscrete1e3 = "177.438800314507";
inline constexpr const char* kDiscrete1e4 = "1245.948264268500126600166";

}  // namespace oracle

#endif  // LOGINT_TESTS_ORACLE_VALUES_HPP
