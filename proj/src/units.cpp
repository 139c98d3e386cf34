#include "fdcache/units.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcache {

LinearPower dbm_to_watts(double dbm) {
    if (!std::isfinite(dbm)) throw std::invalid_argument("dbm_to_watts: non-finite input");
    return LinearPower{std::pow(10.0, (dbm - 30.0) / 10.0)};
}

double db_to_linear(double db) {
    if (!std::isfinite(db)) throw std::invalid_argument("db_to_linear: non-finite input");
    return std::pow(10.0, db / 10.0);
}

double watts_to_dbm(double watts) {
    if (!(watts > 0.0)) throw std::invalid_argument("watts_to_dbm: requires positive power");
    return 10.0 * std::log10(watts) + 30.0;
}

double linear_to_db(double ratio) {
    if (!(ratio > 0.0)) throw std::invalid_argument("linear_to_db: requires positive ratio");
    return 10.0 * std::log10(ratio);
}

}  // namespace fdcache
