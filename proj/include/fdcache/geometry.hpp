#pragma once

#include <vector>

#include "fdcache/caching_types.hpp"
#include "fdcache/random.hpp"

// Sampling of the marked SBS point process and of the file point process on
// a finite disc window, plus distance utilities. All functions are pure over
// an explicit random stream; parallel callers use one stream per snapshot.

namespace fdcache {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point2D& a, const Point2D& b);

// One realization of SBS positions with their UL-node and DL-node marks and
// cache states. Invariants: all four lists share one length; |ul[i]-sbs[i]|
// and |sbs[i]-dl[i]| equal the configured link distances.
struct MarkedNetwork {
    std::vector<Point2D> sbs;
    std::vector<Point2D> ul;
    std::vector<Point2D> dl;
    std::vector<unsigned char> cache_miss;  // 1 = cache miss at that SBS
    double window_radius = 0.0;
};

// File locations with their catalog ranks (1-based).
struct FileProcess {
    std::vector<Point2D> points;
    std::vector<int> file_index;
};

// Homogeneous PPP on the disc of the given radius centered at the origin:
// Poisson(density*pi*r^2) points, i.i.d. uniform. Negative density rejected.
std::vector<Point2D> sample_ppp(double density, double window_radius, RandomStream& rng);

// Attach one UL and one DL mark per SBS at fixed distances and independent
// uniform angles. cache_miss is initialized to all-miss.
MarkedNetwork attach_marks(std::vector<Point2D> sbs, double r_ul, double r_dl,
                           RandomStream& rng);

// Marked file PPP of total density eta; ranks i.i.d. with the catalog's
// request probabilities (superposition of independently thinned PPPs).
FileProcess sample_file_process(const CatalogModel& catalog, double window_radius,
                                RandomStream& rng);

// O(1) sampler for a fixed discrete distribution (Walker alias method).
class AliasTable {
public:
    explicit AliasTable(const std::vector<double>& probs);
    int sample(RandomStream& rng) const;  // 0-based index

private:
    std::vector<double> threshold_;
    std::vector<int> alias_;
};

}  // namespace fdcache
