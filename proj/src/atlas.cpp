#include "ccm/atlas.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ccm/errors.hpp"
#include "ccm/farey.hpp"
#include "ccm/parallel.hpp"

namespace ccm {

namespace {

constexpr int kFormatVersion = 1;

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void collect_cell_endpoints(const FareyDomain& domain, int depth, int cutoff,
                            std::set<Rational>& out) {
    for (long long j = -(cutoff + 1); j <= cutoff + 1; ++j)
        out.insert(harmonic_endpoint(domain, j));
    if (depth <= 1)
        return;
    for (long long n = -cutoff; n <= cutoff; ++n)
        collect_cell_endpoints(harmonic_refine(domain, n), depth - 1, cutoff, out);
}

} // namespace

std::string AtlasBuildSpec::describe() const {
    std::ostringstream os;
    if (q_max)
        os << "qmax:" << *q_max;
    else if (depth_cutoff)
        os << "depth:" << depth_cutoff->first << ",cutoff:" << depth_cutoff->second;
    else
        os << "empty";
    return os.str();
}

std::string atlas_fingerprint(const FamilySpec& family, double tol, const std::string& generator) {
    std::string canon = "ccm-atlas-v" + std::to_string(kFormatVersion) + "|family=" + family.name +
                        "|l=" + std::to_string(family.l) + "|tol=" + format_real(tol) +
                        "|gen=" + generator;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
    return buf;
}

TongueAtlas::TongueAtlas(FamilySpec family, double tol, std::string generator,
                         std::vector<Tongue> tongues)
    : family_(std::move(family)), tol_(tol), generator_(std::move(generator)),
      tongues_(std::move(tongues)) {
    fingerprint_ = atlas_fingerprint(family_, tol_, generator_);
    validate();
}

void TongueAtlas::validate() const {
    if (family_.name != "sine-l")
        throw CorruptAtlas("atlas: unknown family '" + family_.name + "'");
    for (std::size_t i = 0; i < tongues_.size(); ++i) {
        const Tongue& t = tongues_[i];
        if (!(t.t_lo <= t.center && t.center <= t.t_hi))
            throw CorruptAtlas("atlas: tongue " + t.rho.str() + " violates t_lo <= center <= t_hi");
        if (i > 0) {
            if (!(tongues_[i - 1].rho < t.rho))
                throw CorruptAtlas("atlas: tongues not sorted strictly by rational");
            if (tongues_[i - 1].t_hi > t.t_lo)
                throw CorruptAtlas("atlas: tongues " + tongues_[i - 1].rho.str() + " and " +
                                   t.rho.str() + " overlap");
        }
    }
}

const Tongue* TongueAtlas::lookup(const Rational& rho) const {
    auto it = std::lower_bound(tongues_.begin(), tongues_.end(), rho,
                               [](const Tongue& t, const Rational& r) { return t.rho < r; });
    if (it == tongues_.end() || !(it->rho == rho))
        return nullptr;
    return &*it;
}

double TongueAtlas::center_of(const Rational& rho) const {
    const Tongue* t = lookup(rho);
    if (!t)
        throw MissingCenter("atlas: no tongue for " + rho.str());
    return t->center;
}

std::vector<Rational> atlas_rationals(const AtlasBuildSpec& spec) {
    std::vector<Rational> out;
    if (spec.q_max) {
        const int n = *spec.q_max;
        if (n < 1)
            throw std::invalid_argument("atlas_rationals: q_max must be >= 1");
        // Farey sequence of order n via the standard neighbor recurrence.
        long long a = 0, b = 1, c = 1, d = n;
        out.emplace_back(a, b);
        while (c <= n) {
            long long k = (n + b) / d;
            long long e = k * c - a, f = k * d - b;
            a = c;
            b = d;
            c = e;
            d = f;
            out.emplace_back(a, b);
        }
        return out;
    }
    if (spec.depth_cutoff) {
        auto [depth, cutoff] = *spec.depth_cutoff;
        if (depth < 1 || cutoff < 0)
            throw std::invalid_argument("atlas_rationals: bad depth/cutoff");
        std::set<Rational> endpoints;
        FareyDomain base{Rational(0, 1), Rational(1, 1)};
        endpoints.insert(base.lo());
        endpoints.insert(base.hi());
        collect_cell_endpoints(base, depth, cutoff, endpoints);
        out.assign(endpoints.begin(), endpoints.end());
        return out;
    }
    throw std::invalid_argument("atlas_rationals: empty build spec");
}

TongueAtlas build_atlas(const CriticalFamily& fam, const AtlasBuildSpec& spec, double tol,
                        int jobs, const RotationOptions& opt) {
    const std::vector<Rational> rationals = atlas_rationals(spec);
    std::vector<Tongue> tongues(rationals.size());
    parallel_for(rationals.size(), jobs,
                 [&](std::size_t i) { tongues[i] = compute_tongue(fam, rationals[i], tol, opt); });
    FamilySpec family;
    family.l = fam.critical_exponent();
    return TongueAtlas(family, tol, spec.describe(), std::move(tongues));
}

void save_atlas(const TongueAtlas& atlas, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("save_atlas: cannot open " + path.string() + " for writing");
    out << "{\"format_version\":" << kFormatVersion << ",\"family\":\"" << atlas.family().name
        << "\",\"l\":" << atlas.family().l << ",\"tol\":" << format_real(atlas.tol())
        << ",\"generator\":\"" << atlas.generator() << "\",\"count\":" << atlas.size()
        << ",\"fingerprint\":\"" << atlas.fingerprint() << "\"}\n";
    for (const Tongue& t : atlas.tongues()) {
        out << "{\"num\":\"" << t.rho.num().str() << "\",\"den\":\"" << t.rho.den().str()
            << "\",\"t_lo\":" << format_real(t.t_lo) << ",\"t_hi\":" << format_real(t.t_hi)
            << ",\"center\":" << format_real(t.center) << ",\"tol\":" << format_real(t.tol)
            << "}\n";
    }
    if (!out)
        throw Error("save_atlas: write to " + path.string() + " failed");
}

TongueAtlas load_atlas(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("load_atlas: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw CorruptAtlas("load_atlas: empty file " + path.string());

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw CorruptAtlas(std::string("load_atlas: bad header: ") + e.what());
    }
    try {
        if (header.at("format_version").get<int>() != kFormatVersion)
            throw VersionMismatch("load_atlas: unsupported format version in " + path.string());
        FamilySpec family;
        family.name = header.at("family").get<std::string>();
        family.l = header.at("l").get<int>();
        const double tol = header.at("tol").get<double>();
        const std::string generator = header.at("generator").get<std::string>();
        const std::string fingerprint = header.at("fingerprint").get<std::string>();
        const std::size_t count = header.at("count").get<std::size_t>();

        std::vector<Tongue> tongues;
        tongues.reserve(count);
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            nlohmann::json rec = nlohmann::json::parse(line);
            Tongue t;
            t.rho = Rational(BigInt(rec.at("num").get<std::string>()),
                             BigInt(rec.at("den").get<std::string>()));
            t.t_lo = rec.at("t_lo").get<double>();
            t.t_hi = rec.at("t_hi").get<double>();
            t.center = rec.at("center").get<double>();
            t.tol = rec.at("tol").get<double>();
            tongues.push_back(std::move(t));
        }
        if (tongues.size() != count)
            throw CorruptAtlas("load_atlas: record count mismatch (truncated file?)");
        TongueAtlas atlas(family, tol, generator, std::move(tongues));
        if (atlas.fingerprint() != fingerprint)
            throw CorruptAtlas("load_atlas: fingerprint mismatch");
        return atlas;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptAtlas(std::string("load_atlas: malformed record: ") + e.what());
    } catch (const std::domain_error& e) {
        throw CorruptAtlas(std::string("load_atlas: invalid rational: ") + e.what());
    }
}

} // namespace ccm
