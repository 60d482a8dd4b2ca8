#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "exciton/chain_spectrum.hpp"
#include "exciton/constants.hpp"
#include "exciton/errors.hpp"
#include "exciton/segments.hpp"

using namespace exciton;
using std::numbers::pi;

namespace {

ChainSpec common(double theta = 0.0)
{
    ChainSpec s = ChainSpec::reference();
    s.dipole_angle = theta;
    return s;
}

ObservationPoint on_axis(double lattice_constants)
{
    return {{0.0, 0.0, lattice_constants * ChainSpec::reference().lattice_const}};
}

InitialState random_state(std::mt19937& rng, int m)
{
    std::normal_distribution<double> g;
    std::vector<StateComponent> comps;
    const int dim = 1 << m;
    for (int bits = 0; bits < dim; ++bits) {
        StateComponent c;
        for (int s = 0; s < m; ++s) c.occupation.push_back((bits >> s) & 1);
        c.amplitude = {g(rng), g(rng)};
        comps.push_back(std::move(c));
    }
    return InitialState::from_components(std::move(comps)).normalized();
}

}  // namespace

TEST_CASE("occupancy strings")
{
    const auto occ = parse_occupancy("1011");
    CHECK(occ == std::vector<bool>{true, false, true, true});
    CHECK(format_occupancy(occ) == "1011");
    CHECK_THROWS_AS(parse_occupancy(""), DomainError);
    CHECK_THROWS_AS(parse_occupancy("10x1"), DomainError);
}

TEST_CASE("decompose")
{
    const double a = common().lattice_const;
    const auto layout = decompose(parse_occupancy("1011"), common());
    REQUIRE(layout.segments.size() == 2);
    CHECK(layout.segments[0].first_site == 0);
    CHECK(layout.segments[0].n_sites == 1);
    CHECK(layout.segments[0].center.x == 0.0);
    CHECK(layout.segments[0].length == doctest::Approx(2 * a));
    CHECK(layout.segments[1].first_site == 2);
    CHECK(layout.segments[1].n_sites == 2);
    CHECK(layout.segments[1].center.x == doctest::Approx(2.5 * a).epsilon(1e-15));
    CHECK(layout.segments[1].modes.size() == 2);
    CHECK(layout.warnings.empty());

    const auto equal = decompose(parse_occupancy("11011"), common());
    CHECK(equal.warnings.has(Warning::resonant_neighbors));

    const auto padded = decompose(parse_occupancy("0011100"), common());
    REQUIRE(padded.segments.size() == 1);
    CHECK(padded.segments[0].first_site == 2);
    CHECK(padded.segments[0].center.x == doctest::Approx(3 * a).epsilon(1e-15));

    CHECK_THROWS_AS(decompose({}, common()), DomainError);
    CHECK_THROWS_AS(decompose(parse_occupancy("000"), common()), DomainError);
}

TEST_CASE("decompose round-trips random occupancies")
{
    std::mt19937 rng(7);
    std::bernoulli_distribution coin(0.6);
    std::uniform_int_distribution<int> len(1, 60);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<bool> occ(static_cast<std::size_t>(len(rng)));
        for (std::size_t i = 0; i < occ.size(); ++i) occ[i] = coin(rng);
        occ[static_cast<std::size_t>(trial) % occ.size()] = true;
        const auto layout = decompose(occ, common());
        CHECK(layout.reconstruct_occupancy() == occ);
        int total = 0;
        for (std::size_t s = 0; s < layout.segments.size(); ++s) {
            const Segment& seg = layout.segments[s];
            total += seg.n_sites;
            if (s > 0) {
                const Segment& prev = layout.segments[s - 1];
                CHECK(seg.first_site > prev.first_site + prev.n_sites);
            }
        }
        CHECK(total == static_cast<int>(std::count(occ.begin(), occ.end(), true)));
    }
}

TEST_CASE("inter-segment coupling")
{
    const double mu = common().dipole_mag;
    const double r = 3e-7;
    const double unit = coulomb_factor() * mu * mu / (r * r * r);
    const Vec3 x{1, 0, 0};
    const Vec3 z{0, 0, 1};
    CHECK(inter_segment_coupling(x * mu, x * mu, x * r) == doctest::Approx(-2 * unit).epsilon(1e-15));
    CHECK(inter_segment_coupling(z * mu, z * mu, x * r) == doctest::Approx(unit).epsilon(1e-15));
    CHECK(inter_segment_coupling(x * mu, z * mu, x * r) == 0.0);
    CHECK_THROWS_AS(inter_segment_coupling(x, x, Vec3{}), GeometryError);

    // Collinear separation reproduces 1 - 3 cos^2 theta.
    for (int i = 0; i <= 1000; ++i) {
        const double theta = (pi / 2) * i / 1000.0;
        const Vec3 d{std::cos(theta), 0, std::sin(theta)};
        const double c = std::cos(theta);
        const double expected = unit * (1.0 - 3.0 * c * c);
        CHECK(std::fabs(inter_segment_coupling(d * mu, d * mu, x * r) - expected) <= 1e-12 * unit);
    }

    const auto layout = decompose(parse_occupancy("1011"), common());
    const auto sc = segment_coupling(layout.segments[0], layout.segments[1]);
    CHECK(sc.point_dipole_valid == false);  // 2.5 a separation vs 3 a length
    CHECK(sc.energy < 0.0);
    const auto spread = decompose(parse_occupancy("1000011"), common());
    CHECK(segment_coupling(spread.segments[0], spread.segments[1]).point_dipole_valid);
}

TEST_CASE("resonance between segments")
{
    const auto layout = decompose(parse_occupancy("1011"), common());
    // |J| / (hbar Gamma_A) = 11.5, far above one linewidth.
    CHECK(resonance_check(layout.segments[0], layout.segments[1]) == Resonance::blocked);
    const auto same = decompose(parse_occupancy("11011"), common());
    CHECK(resonance_check(same.segments[0], same.segments[1]) == Resonance::resonant);
    const auto magic = decompose(parse_occupancy("1011"), common(magic_angle()));
    CHECK(resonance_check(magic.segments[0], magic.segments[1]) == Resonance::resonant);
    CHECK(resonance_check(layout.segments[0], layout.segments[1], 20.0) == Resonance::resonant);
    CHECK_THROWS_AS(resonance_check(layout.segments[0], layout.segments[1], -1.0), DomainError);
    CHECK(std::string(to_string(Resonance::blocked)) == "blocked");
}

TEST_CASE("initial states and coherences")
{
    const auto sym = InitialState::symmetric_single_excitation(2);
    CHECK(sym.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
    const auto rho = sym.coherences();
    CHECK(rho[0].real() == doctest::Approx(0.5));
    CHECK(rho[3].real() == doctest::Approx(0.5));
    CHECK(rho[1].real() == doctest::Approx(0.5));
    CHECK(rho[2].real() == doctest::Approx(0.5));

    // Both excited: populations 1, no coherence.
    const auto both = InitialState::basis({1, 1});
    const auto rho11 = both.coherences();
    CHECK(rho11[0] == std::complex<double>(1.0));
    CHECK(rho11[3] == std::complex<double>(1.0));
    CHECK(rho11[1] == std::complex<double>(0.0));
    CHECK(rho11[2] == std::complex<double>(0.0));

    const auto phased = InitialState::from_strings({{"10", {1.0, 0.0}}, {"01", {0.0, 1.0}}}).normalized();
    const auto rp = phased.coherences();
    // <B_0^dagger B_1> = conj(c_10) c_01 = i / 2.
    CHECK(rp[1].imag() == doctest::Approx(0.5));
    CHECK(rp[2] == std::conj(rp[1]));

    CHECK_THROWS_AS(InitialState::from_components({}), DomainError);
    CHECK_THROWS_AS(InitialState::from_strings({{"10", 1.0}, {"1", 1.0}}), DomainError);
    CHECK_THROWS_AS(InitialState::from_strings({{"12", 1.0}}), DomainError);
    CHECK_THROWS_AS(InitialState::from_strings({{"10", 1.0}, {"10", 1.0}}), DomainError);
    CHECK_THROWS_AS(InitialState::basis({2}), DomainError);
    CHECK_THROWS_AS(InitialState::from_strings({{"10", 0.0}}).normalized(), DomainError);
}

TEST_CASE("term labels")
{
    CHECK(term_labels(1) == std::vector<std::string>{"I_0"});
    CHECK(term_labels(2) == std::vector<std::string>{"I_0", "I_1", "G_0_1", "G_1_0"});
    CHECK(term_labels(3).size() == 9);
}

TEST_CASE("single segment reduces to the chain intensity")
{
    ChainSpec spec = common(0.3);
    spec.n_sites = 5;
    const auto layout = decompose(parse_occupancy("11111"), spec);
    // Centre the chain at the origin by shifting the observer.
    const double cx = layout.segments[0].center.x;
    const ObservationPoint obs{{cx + 2e-5, 0.0, 7e-5}};
    const ObservationPoint centred{{2e-5, 0.0, 7e-5}};
    const double arrival = latest_arrival(layout, obs);
    for (double lifetimes : {0.0, 0.3, 1.7}) {
        const double t = arrival + lifetimes / layout.segments[0].superradiant().gamma;
        const auto p = total_intensity(layout, InitialState::basis({1}), obs, t);
        const double direct = intensity_single_mode(spec, 1, centred, t, 1).value;
        CHECK(p.total == doctest::Approx(direct).epsilon(1e-12));
        CHECK(p.terms.size() == 1);
    }
}

TEST_CASE("two-segment interference properties")
{
    const auto layout = decompose(parse_occupancy("1011"), common());
    const auto obs = on_axis(100);
    const double t0 = latest_arrival(layout, obs);
    const double gamma_a = atomic_decay_rate(common().with_sites(1));

    SUBCASE("doubly excited state has no interference")
    {
        for (int i = 0; i < 50; ++i) {
            const auto p = total_intensity(layout, InitialState::basis({1, 1}), obs, t0 + i * 0.1 / gamma_a);
            CHECK(p.terms[2] == 0.0);
            CHECK(p.terms[3] == 0.0);
            CHECK(p.total == doctest::Approx(p.terms[0] + p.terms[1]).epsilon(1e-15));
        }
    }
    SUBCASE("symmetric state: G_0_1 equals G_1_0 and populations are halved")
    {
        const auto sym = InitialState::symmetric_single_excitation(2);
        const auto one = InitialState::basis({1, 1});
        for (int i = 0; i < 50; ++i) {
            const double t = t0 + i * 0.1 / gamma_a;
            const auto p = total_intensity(layout, sym, obs, t);
            const auto q = total_intensity(layout, one, obs, t);
            CHECK(p.terms[2] == doctest::Approx(p.terms[3]).epsilon(1e-12));
            CHECK(p.terms[0] == doctest::Approx(0.5 * q.terms[0]).epsilon(1e-14));
            CHECK(p.terms[1] == doctest::Approx(0.5 * q.terms[1]).epsilon(1e-14));
        }
    }
    SUBCASE("global phase and Cauchy-Schwarz on random states")
    {
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> u(0.0, 2 * pi);
        for (int trial = 0; trial < 50; ++trial) {
            const auto state = random_state(rng, 2);
            const auto shifted = state.with_global_phase(u(rng));
            const double t = t0 + (trial % 10) * 0.37 / gamma_a;
            const auto p = total_intensity(layout, state, obs, t);
            const auto q = total_intensity(layout, shifted, obs, t);
            CHECK(p.total == doctest::Approx(q.total).epsilon(1e-12));
            CHECK(p.total >= 0.0);
            const double cross = p.terms[2] + p.terms[3];
            CHECK(std::fabs(cross) <= 2.0 * std::sqrt(p.terms[0] * p.terms[1]) * (1 + 1e-12));
        }
    }
    SUBCASE("fields arrive separately")
    {
        const double t_alpha = obs.position.z / constants::speed_of_light;
        const double mid = 0.5 * (t_alpha + t0);
        const auto p = total_intensity(layout, InitialState::symmetric_single_excitation(2), obs, mid);
        CHECK(p.terms[0] > 0.0);
        CHECK(p.terms[1] == 0.0);
        CHECK(p.terms[2] == 0.0);
        CHECK(p.warnings.has(Warning::before_arrival));
    }
    SUBCASE("state and layout must agree")
    {
        CHECK_THROWS_AS(total_intensity(layout, InitialState::basis({1}), obs, t0), DomainError);
        const auto unnormalised = InitialState::from_strings({{"10", 1.0}, {"01", 1.0}});
        CHECK_THROWS_AS(total_intensity(layout, unnormalised, obs, t0), DomainError);
    }
}

TEST_CASE("intensity trace matches pointwise evaluation")
{
    const auto layout = decompose(parse_occupancy("1101110"), common(0.2));
    const auto state = InitialState::symmetric_single_excitation(2);
    const ObservationPoint obs{{1e-5, 0.0, 3e-5}};
    const double t0 = latest_arrival(layout, obs);
    const auto times = time_grid(t0, 1e-6, 17);
    const auto trace = intensity_trace(layout, state, obs, times);
    CHECK(trace.labels == term_labels(2));
    for (std::size_t i = 0; i < times.size(); ++i) {
        const auto p = total_intensity(layout, state, obs, times[i]);
        CHECK(trace.total[i] == p.total);
        double sum = 0.0;
        for (std::size_t j = 0; j < trace.terms.size(); ++j) sum += trace.terms[j][i];
        CHECK(trace.total[i] == doctest::Approx(sum).epsilon(1e-14));
    }
}
