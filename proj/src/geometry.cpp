#include "fdcache/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcache {

double distance(const Point2D& a, const Point2D& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<Point2D> sample_ppp(double density, double window_radius, RandomStream& rng) {
    if (!(density >= 0.0)) throw std::invalid_argument("sample_ppp: density must be >= 0");
    if (!(window_radius > 0.0)) throw std::invalid_argument("sample_ppp: window radius must be > 0");
    const long n = rng.poisson(density * M_PI * window_radius * window_radius);
    std::vector<Point2D> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        // uniform on the disc: radius via sqrt of uniform, independent angle
        const double r = window_radius * std::sqrt(rng.uniform01());
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        pts.push_back(Point2D{r * std::cos(phi), r * std::sin(phi)});
    }
    return pts;
}

MarkedNetwork attach_marks(std::vector<Point2D> sbs, double r_ul, double r_dl,
                           RandomStream& rng) {
    if (!(r_ul > 0.0) || !(r_dl > 0.0))
        throw std::invalid_argument("attach_marks: link distances must be > 0");
    MarkedNetwork net;
    const std::size_t n = sbs.size();
    net.sbs = std::move(sbs);
    net.ul.reserve(n);
    net.dl.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double au = rng.uniform(0.0, 2.0 * M_PI);
        const double ad = rng.uniform(0.0, 2.0 * M_PI);
        net.ul.push_back(Point2D{net.sbs[i].x + r_ul * std::cos(au),
                                 net.sbs[i].y + r_ul * std::sin(au)});
        net.dl.push_back(Point2D{net.sbs[i].x + r_dl * std::cos(ad),
                                 net.sbs[i].y + r_dl * std::sin(ad)});
    }
    net.cache_miss.assign(n, 1);
    return net;
}

FileProcess sample_file_process(const CatalogModel& catalog, double window_radius,
                                RandomStream& rng) {
    FileProcess fp;
    if (catalog.eta_files == 0.0) return fp;
    fp.points = sample_ppp(catalog.eta_files, window_radius, rng);
    fp.file_index.reserve(fp.points.size());
    const AliasTable alias(catalog.request_probs);
    for (std::size_t i = 0; i < fp.points.size(); ++i)
        fp.file_index.push_back(alias.sample(rng) + 1);
    return fp;
}

AliasTable::AliasTable(const std::vector<double>& probs) {
    const int n = static_cast<int>(probs.size());
    if (n == 0) throw std::invalid_argument("AliasTable: empty distribution");
    threshold_.assign(n, 1.0);
    alias_.assign(n, 0);
    std::vector<double> scaled(n);
    std::vector<int> small, large;
    for (int i = 0; i < n; ++i) {
        scaled[i] = probs[i] * n;
        (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
        const int s = small.back();
        const int l = large.back();
        small.pop_back();
        threshold_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] -= 1.0 - scaled[s];
        if (scaled[l] < 1.0) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (int i : large) threshold_[i] = 1.0;
    for (int i : small) threshold_[i] = 1.0;
}

int AliasTable::sample(RandomStream& rng) const {
    const double u = rng.uniform01() * static_cast<double>(threshold_.size());
    int k = static_cast<int>(u);
    if (k >= static_cast<int>(threshold_.size())) k = static_cast<int>(threshold_.size()) - 1;
    const double frac = u - static_cast<double>(k);
    return frac < threshold_[k] ? k : alias_[k];
}

}  // namespace fdcache
