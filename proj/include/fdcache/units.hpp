#pragma once

// dB / dBm <-> linear conversions. Everything downstream of the scenario
// boundary computes in linear units (watts, meters, ratios); decibels only
// appear in configuration files and report columns.

namespace fdcache {

struct LinearPower {
    double watts = 0.0;  // >= 0
};

// 10^((p - 30) / 10) watts. Throws std::invalid_argument on non-finite input.
LinearPower dbm_to_watts(double dbm);

// 10^(x / 10). Throws std::invalid_argument on non-finite input.
double db_to_linear(double db);

// Report-boundary inverses.
double watts_to_dbm(double watts);
double linear_to_db(double ratio);

}  // namespace fdcache
