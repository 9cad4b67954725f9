// Generated by tests/oracle/gen_oracle.py (mpmath, 40 digits). Do not edit.
#pragma once
#include <array>
namespace oracle {
struct ZetaSample { double sigma, t, re, im; };
inline constexpr std::array<ZetaSample, 20> kZetaSamples = {{
    {1.237206, 43.785204, 7.397958399984677995588002e-1, 5.702382543996365323093999e-1},
    {2.175519, 48.450657, 7.800799973761454971061634e-1, -1.46561805931587034667188e-1},
    {2.493202, 93.934561, 8.508690728619391949402877e-1, -1.370739544304027489794549e-1},
    {1.827837, 55.509815, 1.175098478365305339139343, -2.364236562587302009970937e-1},
    {1.905827, 32.980556, 7.705051490757410970582912e-1, 2.084997425195894928504254e-1},
    {0.981963, 92.52407, 6.793182788614139864030742e-1, -4.23918264390681523674114e-1},
    {1.806827, 54.99538, 1.299180736059340097185297, -1.307463451402511553245124e-1},
    {0.761661, 70.904303, 1.506054065335355609143259, 3.077445887527546922889501e-1},
    {0.950789, 31.494614, 7.178637423109643468748531e-1, 4.701801314272618133310506e-2},
    {1.651144, 56.476079, 9.522498141908079104425442e-1, -2.029269721032332872166205e-1},
    {2.287605, 0.433802, 1.360929909561265286689994, -2.092309420918978147577679e-1},
    {2.943731, 79.883917, 1.065595096183399441925383, 1.452467604521557910086772e-1},
    {1.909927, 78.180556, 8.104454676474917519998325e-1, 1.975093655136755536214394e-1},
    {1.342159, 50.871537, 9.341440221183031848925769e-1, 4.095783051135196045868286e-1},
    {1.76291, 97.025714, 1.048088850898106918860001, 3.64782577838969467546841e-1},
    {2.43061, 24.0629, 9.149452445271167002732386e-1, 4.493278546183484475529241e-2},
    {1.340413, 40.089305, 8.348215453636978886734121e-1, -3.061797608323884177198278e-1},
    {1.336406, 30.234984, 5.87157258242870770326416e-1, -2.952209971087848795677475e-1},
    {0.72258, 77.448404, 2.783395523859546159005134e-1, 3.491931882139351395898748e-1},
    {1.951933, 84.121661, 8.763477133597887444747032e-1, -1.197941434816789859559993e-1},
}};
inline constexpr double kEulerGamma = 5.772156649015328606065121e-1;
inline constexpr double kLnTwoPi = 1.837877066409345483560659;
inline constexpr double kZeta2 = 1.644934066848226436472415;
inline constexpr double kZeta3 = 1.202056903159594285399738;
inline constexpr double kZeta4 = 1.082323233711138191516004;
inline constexpr double kZeta8 = 1.004077356197944339378685;
inline constexpr double kZetaHalf = -1.460354508809586812889499;
struct PointValue { double t, value; };
inline constexpr std::array<PointValue, 11> kTheta = {{
    {0.5, -1.125052715405562861575901},
    {1.0, -1.767547952812290388302216},
    {3.0, -2.994564696010825236240455},
    {6.0, -3.527573970941369905479975},
    {10.0, -3.067074396289895291702014},
    {14.0, -1.782948700416149906440585},
    {20.0, 1.186894808444484044812757},
    {50.0, 2.646136607016140964745495e+1},
    {100.0, 8.797216523178721962548313e+1},
    {1000.0, 2.034546428038031608703345e+3},
    {10000.0, 3.186192383083582087295034e+4},
}};
inline constexpr double kThetaMinimumAt = 6.28983598883690277966509;
inline constexpr std::array<PointValue, 10> kHardyZ = {{
    {0.0, -1.460354508809586812889499},
    {5.0, -7.388634282752647643559249e-1},
    {14.0, -1.056262677798826101389108e-1},
    {29.5, 1.338614265557987382855052},
    {30.5, -9.622119535669341203957071e-2},
    {50.0, -3.407350059550249827533166e-1},
    {100.0, 2.69269705666446347499538},
    {1000.0, 9.977946375215866139860027e-1},
    {10000.0, -3.413947242312085591768904e-1},
    {100000.0, 5.879592468681765041546472},
}};
inline constexpr std::array<double, 3> kFirstZeros = {
    1.413472514173469379045725e+1,
    2.102203963877155499262848e+1,
    2.501085758014568876321379e+1,
};
inline constexpr int kZeroCount100 = 29;
inline constexpr int kZeroCount30 = 3;
inline constexpr int kZeroCount1000 = 649;
inline constexpr double kS30 = -5.64877444361416650297904e-1;
inline constexpr double kS1At10 = -5.882778351770211538693535e-1;
inline constexpr double kS1At100 = -5.240193881656083982940676e-1;
inline constexpr double kS1At300 = -7.137992970746767952449578e-1;
inline constexpr double kZSquaredTo1413 = 1.567809643267161355114608e+1;
inline constexpr double kJHat1e4 = 7.526894635369902973724331e+4;
inline constexpr double kV1e4 = 7.949678970468370113117818e+4;
inline constexpr double kPhi1Asymptotic1e4 = 9.526324549235018630068145e+3;
inline constexpr double kPhi1InvAsymptotic1e4 = 1.049441418643065695172163e+4;
inline constexpr unsigned long long kDivisorSum1e7 = 162725364ULL;
inline constexpr unsigned long long kDivisorSum1e9 = 20877697634ULL;
}  // namespace oracle
