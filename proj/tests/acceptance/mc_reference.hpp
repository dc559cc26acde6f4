#pragma once

// Reference grid for the simulation study: expected bias/rmse/coverage per
// (statistic, estimator, N, T) cell. Estimator triples are ordered ed, hpj, toj.

namespace mc_reference {

struct Row {
  const char* statistic;
  double true_value;
  int n;
  int t;
  double bias[3];
  double rmse[3];
  double cp[3];
};

inline constexpr Row kRows[] = {
    {"mean:mu", -0.993, 250, 12, {0.000, 0.000, 0.000}, {0.071, 0.071, 0.071}, {0.948, 0.947, 0.950}},
    {"mean:mu", -0.993, 250, 24, {0.001, 0.001, 0.001}, {0.067, 0.067, 0.067}, {0.945, 0.947, 0.947}},
    {"mean:mu", -0.993, 250, 48, {0.000, 0.000, 0.000}, {0.064, 0.064, 0.064}, {0.955, 0.955, 0.956}},
    {"mean:mu", -0.993, 1000, 12, {0.000, 0.000, 0.000}, {0.035, 0.035, 0.035}, {0.954, 0.952, 0.954}},
    {"mean:mu", -0.993, 1000, 24, {-0.001, -0.001, -0.001}, {0.034, 0.034, 0.034}, {0.945, 0.947, 0.946}},
    {"mean:mu", -0.993, 1000, 48, {-0.001, -0.001, -0.001}, {0.033, 0.033, 0.033}, {0.946, 0.947, 0.946}},
    {"std:mu", 0.997, 250, 12, {0.135, 0.042, 0.005}, {0.145, 0.071, 0.064}, {0.248, 0.901, 0.946}},
    {"std:mu", 0.997, 250, 24, {0.076, 0.016, 0.000}, {0.091, 0.055, 0.057}, {0.676, 0.939, 0.934}},
    {"std:mu", 0.997, 250, 48, {0.040, 0.004, -0.001}, {0.061, 0.049, 0.050}, {0.891, 0.943, 0.939}},
    {"std:mu", 0.997, 1000, 12, {0.136, 0.044, 0.007}, {0.139, 0.052, 0.033}, {0.000, 0.673, 0.942}},
    {"std:mu", 0.997, 1000, 24, {0.076, 0.015, -0.001}, {0.080, 0.030, 0.028}, {0.121, 0.922, 0.946}},
    {"std:mu", 0.997, 1000, 48, {0.040, 0.004, -0.001}, {0.046, 0.025, 0.025}, {0.613, 0.949, 0.944}},
    {"q25:mu", -1.666, 250, 12, {-0.095, -0.030, -0.001}, {0.133, 0.125, 0.200}, {0.831, 0.960, 0.989}},
    {"q25:mu", -1.666, 250, 24, {-0.054, -0.010, 0.003}, {0.103, 0.108, 0.169}, {0.910, 0.964, 0.992}},
    {"q25:mu", -1.666, 250, 48, {-0.026, 0.001, 0.006}, {0.091, 0.103, 0.152}, {0.941, 0.966, 0.993}},
    {"q25:mu", -1.666, 1000, 12, {-0.099, -0.034, -0.005}, {0.109, 0.069, 0.099}, {0.431, 0.928, 0.976}},
    {"q25:mu", -1.666, 1000, 24, {-0.056, -0.012, 0.001}, {0.072, 0.056, 0.088}, {0.754, 0.960, 0.981}},
    {"q25:mu", -1.666, 1000, 48, {-0.029, -0.003, 0.002}, {0.053, 0.052, 0.077}, {0.896, 0.958, 0.982}},
    {"q50:mu", -0.993, 250, 12, {-0.027, -0.018, -0.006}, {0.092, 0.113, 0.180}, {0.934, 0.958, 0.988}},
    {"q50:mu", -0.993, 250, 24, {-0.019, -0.010, -0.006}, {0.085, 0.102, 0.157}, {0.943, 0.965, 0.991}},
    {"q50:mu", -0.993, 250, 48, {-0.011, -0.004, 0.000}, {0.082, 0.097, 0.143}, {0.949, 0.961, 0.990}},
    {"q50:mu", -0.993, 1000, 12, {-0.028, -0.019, -0.010}, {0.052, 0.059, 0.092}, {0.904, 0.942, 0.972}},
    {"q50:mu", -0.993, 1000, 24, {-0.019, -0.009, -0.001}, {0.046, 0.053, 0.082}, {0.926, 0.952, 0.978}},
    {"q50:mu", -0.993, 1000, 48, {-0.012, -0.005, -0.002}, {0.042, 0.048, 0.072}, {0.940, 0.961, 0.979}},
    {"q75:mu", -0.320, 250, 12, {0.064, 0.008, -0.010}, {0.118, 0.129, 0.214}, {0.909, 0.965, 0.988}},
    {"q75:mu", -0.320, 250, 24, {0.035, 0.003, -0.002}, {0.099, 0.116, 0.183}, {0.940, 0.971, 0.993}},
    {"q75:mu", -0.320, 250, 48, {0.014, -0.003, -0.005}, {0.089, 0.106, 0.161}, {0.955, 0.969, 0.994}},
    {"q75:mu", -0.320, 1000, 12, {0.067, 0.012, -0.007}, {0.083, 0.064, 0.105}, {0.733, 0.956, 0.978}},
    {"q75:mu", -0.320, 1000, 24, {0.034, 0.001, -0.005}, {0.058, 0.059, 0.094}, {0.893, 0.957, 0.981}},
    {"q75:mu", -0.320, 1000, 48, {0.015, -0.003, -0.004}, {0.047, 0.054, 0.082}, {0.936, 0.960, 0.985}},
    {"mean:gamma0", 1.529, 250, 12, {-0.291, -0.072, 0.000}, {0.296, 0.101, 0.099}, {0.001, 0.804, 0.938}},
    {"mean:gamma0", 1.529, 250, 24, {-0.159, -0.025, 0.002}, {0.167, 0.063, 0.073}, {0.151, 0.920, 0.945}},
    {"mean:gamma0", 1.529, 250, 48, {-0.082, -0.007, 0.002}, {0.094, 0.050, 0.056}, {0.596, 0.946, 0.948}},
    {"mean:gamma0", 1.529, 1000, 12, {-0.291, -0.073, -0.002}, {0.292, 0.081, 0.048}, {0.000, 0.453, 0.948}},
    {"mean:gamma0", 1.529, 1000, 24, {-0.157, -0.023, 0.005}, {0.159, 0.037, 0.036}, {0.000, 0.871, 0.949}},
    {"mean:gamma0", 1.529, 1000, 48, {-0.082, -0.007, 0.001}, {0.086, 0.026, 0.029}, {0.077, 0.940, 0.947}},
    {"std:gamma0", 0.668, 250, 12, {0.215, 0.165, 0.090}, {0.225, 0.188, 0.191}, {0.022, 0.462, 0.913}},
    {"std:gamma0", 0.668, 250, 24, {0.144, 0.074, 0.020}, {0.152, 0.097, 0.107}, {0.103, 0.787, 0.938}},
    {"std:gamma0", 0.668, 250, 48, {0.087, 0.029, 0.002}, {0.095, 0.054, 0.067}, {0.384, 0.912, 0.936}},
    {"std:gamma0", 0.668, 1000, 12, {0.216, 0.165, 0.090}, {0.219, 0.171, 0.124}, {0.000, 0.010, 0.811}},
    {"std:gamma0", 0.668, 1000, 24, {0.147, 0.077, 0.024}, {0.149, 0.084, 0.060}, {0.000, 0.244, 0.928}},
    {"std:gamma0", 0.668, 1000, 48, {0.087, 0.029, 0.002}, {0.090, 0.037, 0.034}, {0.003, 0.765, 0.943}},
    {"q25:gamma0", 1.055, 250, 12, {-0.451, -0.221, -0.085}, {0.453, 0.233, 0.150}, {0.000, 0.209, 0.923}},
    {"q25:gamma0", 1.055, 250, 24, {-0.272, -0.093, -0.017}, {0.277, 0.121, 0.129}, {0.001, 0.788, 0.979}},
    {"q25:gamma0", 1.055, 250, 48, {-0.152, -0.033, 0.000}, {0.161, 0.081, 0.118}, {0.220, 0.942, 0.986}},
    {"q25:gamma0", 1.055, 1000, 12, {-0.453, -0.224, -0.089}, {0.454, 0.227, 0.109}, {0.000, 0.000, 0.742}},
    {"q25:gamma0", 1.055, 1000, 24, {-0.274, -0.094, -0.018}, {0.275, 0.102, 0.066}, {0.000, 0.327, 0.958}},
    {"q25:gamma0", 1.055, 1000, 48, {-0.154, -0.034, 0.000}, {0.156, 0.050, 0.059}, {0.000, 0.864, 0.974}},
    {"q50:gamma0", 1.515, 250, 12, {-0.472, -0.182, -0.054}, {0.476, 0.206, 0.175}, {0.000, 0.549, 0.960}},
    {"q50:gamma0", 1.515, 250, 24, {-0.274, -0.076, -0.015}, {0.281, 0.115, 0.152}, {0.006, 0.873, 0.976}},
    {"q50:gamma0", 1.515, 250, 48, {-0.150, -0.027, -0.001}, {0.161, 0.082, 0.128}, {0.286, 0.951, 0.987}},
    {"q50:gamma0", 1.515, 1000, 12, {-0.473, -0.183, -0.054}, {0.474, 0.189, 0.100}, {0.000, 0.048, 0.912}},
    {"q50:gamma0", 1.515, 1000, 24, {-0.274, -0.075, -0.014}, {0.276, 0.087, 0.075}, {0.000, 0.605, 0.966}},
    {"q50:gamma0", 1.515, 1000, 48, {-0.151, -0.028, -0.003}, {0.154, 0.049, 0.066}, {0.000, 0.894, 0.972}},
    {"q75:gamma0", 1.982, 250, 12, {-0.325, -0.037, 0.029}, {0.337, 0.146, 0.260}, {0.093, 0.948, 0.980}},
    {"q75:gamma0", 1.982, 250, 24, {-0.169, -0.011, 0.002}, {0.187, 0.116, 0.209}, {0.468, 0.965, 0.987}},
    {"q75:gamma0", 1.982, 250, 48, {-0.085, -0.003, -0.001}, {0.112, 0.100, 0.178}, {0.773, 0.966, 0.988}},
    {"q75:gamma0", 1.982, 1000, 12, {-0.324, -0.036, 0.029}, {0.327, 0.079, 0.132}, {0.000, 0.925, 0.964}},
    {"q75:gamma0", 1.982, 1000, 24, {-0.165, -0.005, 0.009}, {0.169, 0.059, 0.109}, {0.027, 0.956, 0.967}},
    {"q75:gamma0", 1.982, 1000, 48, {-0.084, -0.003, -0.001}, {0.092, 0.050, 0.090}, {0.377, 0.958, 0.970}},
    {"mean:rho1", 0.397, 250, 12, {-0.199, 0.008, 0.004}, {0.200, 0.030, 0.054}, {0.000, 0.939, 0.949}},
    {"mean:rho1", 0.397, 250, 24, {-0.097, 0.005, 0.004}, {0.098, 0.021, 0.033}, {0.000, 0.944, 0.951}},
    {"mean:rho1", 0.397, 250, 48, {-0.047, 0.002, 0.001}, {0.049, 0.016, 0.021}, {0.087, 0.945, 0.948}},
    {"mean:rho1", 0.397, 1000, 12, {-0.200, 0.007, 0.004}, {0.200, 0.016, 0.028}, {0.000, 0.916, 0.944}},
    {"mean:rho1", 0.397, 1000, 24, {-0.097, 0.005, 0.003}, {0.097, 0.011, 0.017}, {0.000, 0.919, 0.946}},
    {"mean:rho1", 0.397, 1000, 48, {-0.047, 0.002, 0.000}, {0.048, 0.008, 0.011}, {0.000, 0.939, 0.946}},
    {"std:rho1", 0.198, 250, 12, {0.109, 0.045, -0.030}, {0.109, 0.050, 0.055}, {0.000, 0.496, 0.889}},
    {"std:rho1", 0.198, 250, 24, {0.058, 0.007, -0.012}, {0.059, 0.018, 0.034}, {0.000, 0.931, 0.924}},
    {"std:rho1", 0.198, 250, 48, {0.029, 0.001, -0.003}, {0.031, 0.013, 0.021}, {0.128, 0.945, 0.940}},
    {"std:rho1", 0.198, 1000, 12, {0.109, 0.045, -0.030}, {0.109, 0.047, 0.038}, {0.000, 0.018, 0.739}},
    {"std:rho1", 0.198, 1000, 24, {0.058, 0.008, -0.011}, {0.059, 0.012, 0.019}, {0.000, 0.845, 0.885}},
    {"std:rho1", 0.198, 1000, 48, {0.030, 0.001, -0.002}, {0.030, 0.006, 0.010}, {0.000, 0.950, 0.946}},
    {"q25:rho1", 0.263, 250, 12, {-0.275, -0.011, 0.079}, {0.277, 0.053, 0.133}, {0.000, 0.957, 0.926}},
    {"q25:rho1", 0.263, 250, 24, {-0.135, 0.005, 0.015}, {0.138, 0.038, 0.079}, {0.000, 0.957, 0.975}},
    {"q25:rho1", 0.263, 250, 48, {-0.066, 0.003, 0.002}, {0.069, 0.030, 0.056}, {0.105, 0.964, 0.985}},
    {"q25:rho1", 0.263, 1000, 12, {-0.277, -0.013, 0.079}, {0.277, 0.029, 0.096}, {0.000, 0.926, 0.721}},
    {"q25:rho1", 0.263, 1000, 24, {-0.137, 0.003, 0.010}, {0.137, 0.019, 0.041}, {0.000, 0.951, 0.956}},
    {"q25:rho1", 0.263, 1000, 48, {-0.067, 0.003, 0.002}, {0.067, 0.015, 0.028}, {0.000, 0.954, 0.971}},
    {"q50:rho1", 0.397, 250, 12, {-0.182, 0.020, -0.020}, {0.184, 0.049, 0.098}, {0.000, 0.944, 0.967}},
    {"q50:rho1", 0.397, 250, 24, {-0.085, 0.013, 0.007}, {0.088, 0.036, 0.068}, {0.019, 0.940, 0.972}},
    {"q50:rho1", 0.397, 250, 48, {-0.040, 0.005, 0.001}, {0.045, 0.027, 0.049}, {0.407, 0.958, 0.982}},
    {"q50:rho1", 0.397, 1000, 12, {-0.183, 0.019, -0.024}, {0.183, 0.030, 0.055}, {0.000, 0.868, 0.938}},
    {"q50:rho1", 0.397, 1000, 24, {-0.086, 0.011, 0.004}, {0.086, 0.020, 0.034}, {0.000, 0.903, 0.962}},
    {"q50:rho1", 0.397, 1000, 48, {-0.041, 0.004, -0.001}, {0.042, 0.014, 0.025}, {0.008, 0.940, 0.968}},
    {"q75:rho1", 0.531, 250, 12, {-0.106, 0.045, 0.012}, {0.109, 0.063, 0.096}, {0.011, 0.866, 0.969}},
    {"q75:rho1", 0.531, 250, 24, {-0.047, 0.012, -0.003}, {0.051, 0.036, 0.068}, {0.393, 0.951, 0.980}},
    {"q75:rho1", 0.531, 250, 48, {-0.021, 0.004, -0.002}, {0.028, 0.028, 0.051}, {0.782, 0.961, 0.982}},
    {"q75:rho1", 0.531, 1000, 12, {-0.106, 0.045, 0.013}, {0.106, 0.050, 0.049}, {0.000, 0.502, 0.954}},
    {"q75:rho1", 0.531, 1000, 24, {-0.046, 0.014, 0.000}, {0.047, 0.022, 0.034}, {0.009, 0.879, 0.968}},
    {"q75:rho1", 0.531, 1000, 48, {-0.021, 0.004, -0.002}, {0.023, 0.014, 0.025}, {0.417, 0.946, 0.969}},
};

}  // namespace mc_reference
