#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "gazekit/error.hpp"

namespace gazekit {

// ---------------------------------------------------------------------------
// Scene model
// ---------------------------------------------------------------------------

enum class Movement : int { Standing = 0, Entering = 1, Leaving = 2 };

enum class Cohort : int { Child = 0, Adult = 1 };
enum class Stimulus : int { Animation = 0, LiveAction = 1 };

/// Home bearings of the four person slots, left to right, degrees.
inline constexpr std::array<double, 4> kHomeBearings{-60.0, -30.0, 30.0, 60.0};

/// Normalization constants of the 28-dim feature encoding.
inline constexpr double kDistanceScaleM = 5.0;
inline constexpr double kAngleScaleDeg = 60.0;
inline constexpr double kMovementScale = 2.0;

inline constexpr int kPersonSlots = 4;
inline constexpr int kFeaturesPerPerson = 7;
inline constexpr int kFeatureDim = kPersonSlots * kFeaturesPerPerson; // 28

/// One person's state in one frame. An absent person carries all-zero
/// attributes; that convention is what makes absent rows encode to zeros.
struct PersonState {
    int present = 0;          // 0/1
    double distance = 0.0;    // meters, > 0 when present
    int waving = 0;           // 0/1
    int pointing = 0;         // 0/1
    int talking = 0;          // 0/1
    double angle = 0.0;       // degrees in [-90, 90]
    Movement movement = Movement::Standing;
};

struct SceneFrame {
    std::int64_t frame_index = 0;
    std::array<PersonState, kPersonSlots> persons{}; // ordered by home bearing
    double box_angle = 0.0;                          // constant 0
};

inline bool is_home_bearing(double angle) {
    for (double b : kHomeBearings)
        if (std::abs(angle - b) < 1e-9) return true;
    return false;
}

inline void validate_person(const PersonState& p, int slot) {
    const std::string prefix = "persons[" + std::to_string(slot) + "].";
    auto flag_ok = [](int f) { return f == 0 || f == 1; };
    if (!flag_ok(p.present)) throw ValidationError(prefix + "present", "flag must be 0 or 1");
    if (!flag_ok(p.waving)) throw ValidationError(prefix + "waving", "flag must be 0 or 1");
    if (!flag_ok(p.pointing)) throw ValidationError(prefix + "pointing", "flag must be 0 or 1");
    if (!flag_ok(p.talking)) throw ValidationError(prefix + "talking", "flag must be 0 or 1");
    if (p.movement != Movement::Standing && p.movement != Movement::Entering &&
        p.movement != Movement::Leaving)
        throw ValidationError(prefix + "movement", "not a movement state");
    if (!(p.distance >= 0.0))
        throw ValidationError(prefix + "distance", "must be >= 0");
    if (p.present == 0) {
        if (p.waving) throw ValidationError(prefix + "waving", "absent person cannot wave");
        if (p.pointing) throw ValidationError(prefix + "pointing", "absent person cannot point");
        if (p.talking) throw ValidationError(prefix + "talking", "absent person cannot talk");
        if (p.movement != Movement::Standing)
            throw ValidationError(prefix + "movement", "absent person must be Standing");
        if (p.distance != 0.0)
            throw ValidationError(prefix + "distance", "absent person must have distance 0");
        if (p.angle != 0.0)
            throw ValidationError(prefix + "angle", "absent person must have angle 0");
        return;
    }
    if (!(p.distance > 0.0))
        throw ValidationError(prefix + "distance", "present person must have distance > 0");
    if (p.angle < -90.0 || p.angle > 90.0)
        throw ValidationError(prefix + "angle", "must lie in [-90, 90]");
    if (p.movement == Movement::Standing && !is_home_bearing(p.angle))
        throw ValidationError(prefix + "angle",
                              "standing person must sit on a home bearing (-60,-30,30,60)");
}

inline void validate_frame(const SceneFrame& f) {
    if (f.frame_index < 0) throw ValidationError("frame_index", "must be >= 0");
    if (f.box_angle != 0.0) throw ValidationError("box_angle", "box is fixed at 0 degrees");
    for (int s = 0; s < kPersonSlots; ++s) validate_person(f.persons[s], s);
}

// ---------------------------------------------------------------------------
// Feature encoding
// ---------------------------------------------------------------------------

/// 28 values: person 1..4 rows of
/// [present, distance/5 (clamped to 1), waving, pointing, talking, angle/60, movement/2].
using FeatureVector = std::array<double, kFeatureDim>;

inline FeatureVector encode_frame(const SceneFrame& f) {
    validate_frame(f);
    FeatureVector v{};
    for (int s = 0; s < kPersonSlots; ++s) {
        const PersonState& p = f.persons[s];
        double* row = v.data() + s * kFeaturesPerPerson;
        if (!p.present) continue; // absent rows stay all-zero
        row[0] = 1.0;
        row[1] = std::min(p.distance / kDistanceScaleM, 1.0);
        row[2] = p.waving;
        row[3] = p.pointing;
        row[4] = p.talking;
        row[5] = p.angle / kAngleScaleDeg;
        row[6] = static_cast<double>(p.movement) / kMovementScale;
    }
    return v;
}

/// Inverse of one person row of encode_frame. Lossless for distances within
/// the 5 m clamp range.
inline PersonState decode_person(std::span<const double, kFeaturesPerPerson> row) {
    PersonState p;
    p.present = row[0] != 0.0 ? 1 : 0;
    p.distance = row[1] * kDistanceScaleM;
    p.waving = row[2] != 0.0 ? 1 : 0;
    p.pointing = row[3] != 0.0 ? 1 : 0;
    p.talking = row[4] != 0.0 ? 1 : 0;
    p.angle = row[5] * kAngleScaleDeg;
    p.movement = static_cast<Movement>(static_cast<int>(std::lround(row[6] * kMovementScale)));
    return p;
}

inline SceneFrame decode_frame(const FeatureVector& v, std::int64_t frame_index = 0) {
    SceneFrame f;
    f.frame_index = frame_index;
    for (int s = 0; s < kPersonSlots; ++s)
        f.persons[s] = decode_person(
            std::span<const double, kFeaturesPerPerson>(v.data() + s * kFeaturesPerPerson,
                                                        kFeaturesPerPerson));
    return f;
}

// ---------------------------------------------------------------------------
// Label taxonomies
// ---------------------------------------------------------------------------

enum class Taxonomy : int { Coarse5 = 0, Fine13 = 1 };

inline int taxonomy_size(Taxonomy t) { return t == Taxonomy::Coarse5 ? 5 : 13; }

inline std::string_view taxonomy_name(Taxonomy t) {
    return t == Taxonomy::Coarse5 ? "coarse5" : "fine13";
}

inline Taxonomy parse_taxonomy(std::string_view s) {
    if (s == "coarse5") return Taxonomy::Coarse5;
    if (s == "fine13") return Taxonomy::Fine13;
    throw ValidationError("taxonomy", "unknown taxonomy '" + std::string(s) + "'");
}

enum class LabelKind : int { Body = 0, RightHand = 1, LeftHand = 2, Box = 3 };

/// A gaze target. Index layout:
///   Coarse5: P1..P4 -> 0..3, Box -> 4
///   Fine13:  bodies 0..3, right hands 4..7, left hands 8..11, Box -> 12
class Label {
public:
    Label() = default;

    static Label from_index(Taxonomy tax, int index) {
        if (index < 0 || index >= taxonomy_size(tax))
            throw ValidationError("label", "index " + std::to_string(index) +
                                               " out of range for taxonomy");
        return Label(tax, index);
    }

    static Label body(Taxonomy tax, int person) {
        check_person(person);
        return Label(tax, person);
    }
    static Label right_hand(int person) {
        check_person(person);
        return Label(Taxonomy::Fine13, 4 + person);
    }
    static Label left_hand(int person) {
        check_person(person);
        return Label(Taxonomy::Fine13, 8 + person);
    }
    static Label box(Taxonomy tax) { return Label(tax, taxonomy_size(tax) - 1); }

    Taxonomy taxonomy() const { return tax_; }
    int index() const { return index_; }

    LabelKind kind() const {
        if (index_ == taxonomy_size(tax_) - 1) return LabelKind::Box;
        if (tax_ == Taxonomy::Coarse5) return LabelKind::Body;
        if (index_ < 4) return LabelKind::Body;
        if (index_ < 8) return LabelKind::RightHand;
        return LabelKind::LeftHand;
    }

    /// Person slot 0..3, or -1 for the box.
    int person() const {
        if (kind() == LabelKind::Box) return -1;
        return tax_ == Taxonomy::Coarse5 ? index_ : index_ % 4;
    }

    /// Collapses a Fine13 label to the owning person / box.
    Label to_coarse() const {
        if (tax_ == Taxonomy::Coarse5) return *this;
        if (kind() == LabelKind::Box) return box(Taxonomy::Coarse5);
        return body(Taxonomy::Coarse5, person());
    }

    std::string token() const {
        if (kind() == LabelKind::Box) return "BOX";
        std::string t = "P" + std::to_string(person() + 1);
        if (kind() == LabelKind::RightHand) t += "_RH";
        if (kind() == LabelKind::LeftHand) t += "_LH";
        return t;
    }

    static Label parse(Taxonomy tax, std::string_view tok) {
        if (tok == "BOX") return box(tax);
        if (tok.size() >= 2 && tok[0] == 'P' && tok[1] >= '1' && tok[1] <= '4') {
            int person = tok[1] - '1';
            std::string_view rest = tok.substr(2);
            if (rest.empty()) return body(tax, person);
            if (tax == Taxonomy::Fine13 && rest == "_RH") return right_hand(person);
            if (tax == Taxonomy::Fine13 && rest == "_LH") return left_hand(person);
        }
        throw ValidationError("label", "cannot parse label token '" + std::string(tok) + "'");
    }

    friend bool operator==(const Label& a, const Label& b) {
        return a.tax_ == b.tax_ && a.index_ == b.index_;
    }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }

private:
    Label(Taxonomy tax, int index) : tax_(tax), index_(index) {}
    static void check_person(int person) {
        if (person < 0 || person >= kPersonSlots)
            throw ValidationError("label", "person slot out of range");
    }

    Taxonomy tax_ = Taxonomy::Coarse5;
    int index_ = 0;
};

inline int label_index(const Label& l) { return l.index(); }
inline Label index_label(int i, Taxonomy tax) { return Label::from_index(tax, i); }

} // namespace gazekit
