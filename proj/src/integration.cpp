#include "pacsim/integration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace pacsim {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
constexpr std::array<double, 8> kronrod_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};

constexpr std::array<double, 8> kronrod_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> gauss7_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
double magnitude(T v) {
    return std::abs(v);
}

template <typename T>
struct Segment {
    double a, b;
    T value;
    double error;
};

// One Gauss-Kronrod 15(7) panel; error estimate is |K15 - G7|.
template <typename T>
Segment<T> gk15(const std::function<T(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const T fc = f(c);
    T resk = kronrod_w[7] * fc;
    T resg = gauss7_w[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kronrod_x[i];
        const T sum = f(c - dx) + f(c + dx);
        resk += kronrod_w[i] * sum;
        if (i % 2 == 1) resg += gauss7_w[i / 2] * sum;
    }
    resk *= h;
    resg *= h;
    return {a, b, resk, magnitude<T>(resk - resg)};
}

template <typename T>
std::pair<T, double> adaptive(const std::function<T(double)>& f, double a, double b,
                              const IntegrationConfig& config, int& subdivisions) {
    std::vector<Segment<T>> segments;
    segments.push_back(gk15<T>(f, a, b));
    subdivisions = 1;

    const double abs_floor = 1e-300;
    for (;;) {
        T total{};
        double total_err = 0.0;
        for (const auto& s : segments) {
            total += s.value;
            total_err += s.error;
        }
        const double target =
            std::max(config.relative_tolerance * magnitude<T>(total), abs_floor);
        if (total_err <= target) break;
        if (subdivisions >= config.max_subdivisions) {
            throw ConvergenceError(
                "pacsim::integrate: no convergence after " +
                    std::to_string(subdivisions) + " subdivisions (error bound " +
                    std::to_string(total_err) + ")",
                magnitude<T>(total), total_err);
        }
        // Split the segment with the largest error; leftmost on ties.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segments.size(); ++i) {
            if (segments[i].error > segments[worst].error) worst = i;
        }
        const Segment<T> s = segments[worst];
        const double mid = 0.5 * (s.a + s.b);
        segments[worst] = gk15<T>(f, s.a, mid);
        segments.push_back(gk15<T>(f, mid, s.b));
        ++subdivisions;
    }

    // Deterministic final accumulation in coordinate order.
    std::sort(segments.begin(), segments.end(),
              [](const Segment<T>& l, const Segment<T>& r) { return l.a < r.a; });
    T total{};
    double total_err = 0.0;
    for (const auto& s : segments) {
        total += s.value;
        total_err += s.error;
    }
    return {total, total_err};
}

}  // namespace

IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const IntegrationConfig& config) {
    if (a == b) return {0.0, 0.0, 0};
    if (b < a) {
        IntegrationResult r = integrate(f, b, a, config);
        r.value = -r.value;
        return r;
    }
    int subdivisions = 0;
    auto [value, err] = adaptive<double>(f, a, b, config, subdivisions);
    return {value, err, subdivisions};
}

ComplexIntegrationResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                           double a, double b,
                                           const IntegrationConfig& config) {
    if (a == b) return {{0.0, 0.0}, 0.0, 0};
    if (b < a) {
        ComplexIntegrationResult r = integrate_complex(f, b, a, config);
        r.value = -r.value;
        return r;
    }
    int subdivisions = 0;
    auto [value, err] = adaptive<std::complex<double>>(f, a, b, config, subdivisions);
    return {value, err, subdivisions};
}

double integrate_samples(const std::vector<double>& values, double dt) {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dt;
}

std::complex<double> integrate_samples(const std::vector<std::complex<double>>& values,
                                       double dt) {
    if (values.size() < 2) return {0.0, 0.0};
    std::complex<double> sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dt;
}

namespace {

// Gauss-Legendre rules used for panel grids.
constexpr std::array<double, 8> gl15_x = {
    0.0,
    0.201194093997434522300628303394596,
    0.394151347077563369897207370981045,
    0.570972172608538847537226737253911,
    0.724417731360170047416186054613938,
    0.848206583410427216200648320774217,
    0.937273392400705904307758947710209,
    0.987992518020485428489565718586613};

constexpr std::array<double, 8> gl15_w = {
    0.202578241925561272880620199967519, 0.198431485327111576456118326443839,
    0.186161000015562211026800561866423, 0.166269205816993933553200860481209,
    0.139570677926154314447804794511028, 0.107159220467171935011869546685869,
    0.070366047488108124709267416450667, 0.030753241996117268354628393577204};

constexpr std::array<double, 5> gl10_x = {
    0.148874338981631210884826001129720, 0.433395394129247190799265943165784,
    0.679409568299024406234327365114874, 0.865063366688984510732096688423493,
    0.973906528517171720077964012084452};

constexpr std::array<double, 5> gl10_w = {
    0.295524224714752870173892994651338, 0.269266719309996355091226921569469,
    0.219086362515982043995534934228163, 0.149451349150580593145776339657697,
    0.066671344308688137593568809893332};

void append_panel(PanelGrid& grid, double a, double b, int points) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    if (points == 15) {
        grid.nodes.push_back(c);
        grid.weights.push_back(h * gl15_w[0]);
        for (int i = 1; i < 8; ++i) {
            grid.nodes.push_back(c - h * gl15_x[i]);
            grid.weights.push_back(h * gl15_w[i]);
            grid.nodes.push_back(c + h * gl15_x[i]);
            grid.weights.push_back(h * gl15_w[i]);
        }
    } else {
        for (int i = 0; i < 5; ++i) {
            grid.nodes.push_back(c - h * gl10_x[i]);
            grid.weights.push_back(h * gl10_w[i]);
            grid.nodes.push_back(c + h * gl10_x[i]);
            grid.weights.push_back(h * gl10_w[i]);
        }
    }
}

}  // namespace

PanelGrid make_panel_grid(const std::vector<SupportRegion>& regions, int points_per_panel,
                          double span, int panels_per_region) {
    if (regions.empty()) throw ParameterError("make_panel_grid: no support regions");
    if (points_per_panel != 10 && points_per_panel != 15) {
        throw ParameterError("make_panel_grid: points_per_panel must be 10 or 15");
    }
    std::set<double> breakpoints;
    for (const auto& r : regions) {
        if (!(r.width > 0.0)) throw ParameterError("make_panel_grid: region width must be > 0");
        const double lo = r.center - span * r.width;
        const double step = 2.0 * span * r.width / panels_per_region;
        for (int k = 0; k <= panels_per_region; ++k) breakpoints.insert(lo + k * step);
    }
    PanelGrid grid;
    double prev = *breakpoints.begin();
    for (auto it = std::next(breakpoints.begin()); it != breakpoints.end(); ++it) {
        if (*it - prev > 1e-12) append_panel(grid, prev, *it, points_per_panel);
        prev = *it;
    }
    return grid;
}

double integrate_on_grid(const PanelGrid& grid, const std::function<double(double)>& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) sum += grid.weights[i] * f(grid.nodes[i]);
    return sum;
}

std::complex<double> integrate_on_grid_complex(
    const PanelGrid& grid, const std::function<std::complex<double>(double)>& f) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) sum += grid.weights[i] * f(grid.nodes[i]);
    return sum;
}

}  // namespace pacsim
