#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ccm/family.hpp"
#include "ccm/rational.hpp"
#include "ccm/rotation.hpp"

namespace ccm {

struct FamilySpec {
    std::string name = "sine-l";
    int l = 3;
};

/// What to compute: either every rational with denominator <= q_max, or every
/// endpoint rational of the harmonic-cell tree to the given depth and cutoff.
struct AtlasBuildSpec {
    std::optional<int> q_max;
    std::optional<std::pair<int, int>> depth_cutoff; // (depth, cutoff)

    static AtlasBuildSpec by_qmax(int q) { return {q, std::nullopt}; }
    static AtlasBuildSpec by_depth(int depth, int cutoff) {
        return {std::nullopt, std::make_pair(depth, cutoff)};
    }

    std::string describe() const;
};

/// Sorted, disjoint collection of tongues for one family at one tolerance.
/// Immutable once built; lookups are by exact rational.
class TongueAtlas {
public:
    TongueAtlas(FamilySpec family, double tol, std::string generator,
                std::vector<Tongue> tongues);

    const FamilySpec& family() const { return family_; }
    double tol() const { return tol_; }
    const std::string& generator() const { return generator_; }
    const std::string& fingerprint() const { return fingerprint_; }
    const std::vector<Tongue>& tongues() const { return tongues_; }
    std::size_t size() const { return tongues_.size(); }

    /// Null when the rational is absent.
    const Tongue* lookup(const Rational& rho) const;

    /// Center of the tongue at rho; throws MissingCenter when absent.
    double center_of(const Rational& rho) const;

    CriticalFamily make_family() const { return CriticalFamily(family_.l); }

private:
    void validate() const;

    FamilySpec family_;
    double tol_ = 0.0;
    std::string generator_;
    std::vector<Tongue> tongues_;
    std::string fingerprint_;
};

/// Computes every requested tongue; deterministic for any job count.
TongueAtlas build_atlas(const CriticalFamily& fam, const AtlasBuildSpec& spec, double tol,
                        int jobs = 1, const RotationOptions& opt = {});

/// Rationals an AtlasBuildSpec resolves, in increasing order.
std::vector<Rational> atlas_rationals(const AtlasBuildSpec& spec);

/// Line-delimited format: one header record, then one record per tongue with
/// reals carrying 17 significant digits. Re-serialization is byte-identical.
void save_atlas(const TongueAtlas& atlas, const std::filesystem::path& path);
TongueAtlas load_atlas(const std::filesystem::path& path);

std::string atlas_fingerprint(const FamilySpec& family, double tol, const std::string& generator);

} // namespace ccm
