#pragma once

// Shared robot fixtures: an RRPR arm with orthogonal/parallel axes and a
// 3R arm with arbitrarily placed axes, plus reference values for their
// conversions. Reference numbers were frozen from an independent
// prototype of the same closed forms (line geometry solved analytically,
// transforms multiplied directly).

#include <vector>

#include "kinconv/kinematics.hpp"

namespace fixtures {

using kinconv::DHModel;
using kinconv::DHRow;
using kinconv::GJDModel;
using kinconv::JointKind;
using kinconv::kPi;
using kinconv::Mat3;
using kinconv::Mat4;
using kinconv::PoEModel;
using kinconv::RpyXyzModel;
using kinconv::RpyXyzRow;
using kinconv::Screw;
using kinconv::Transform;
using kinconv::Vec3;

inline Transform transform_from_rows(std::initializer_list<double> v) {
    Mat4 m;
    int i = 0;
    for (double x : v) {
        m(i / 4, i % 4) = x;
        ++i;
    }
    return Transform(m.topLeftCorner<3, 3>(), m.topRightCorner<3, 1>());
}

// ---------------------------------------------------------------------------
// RRPR arm. Exact home tool pose and screws; all values are closed-form.
// ---------------------------------------------------------------------------

inline Transform rrpr_home_pose() {
    return transform_from_rows({1, 0, 0, 0.3,
                                0, 0, -1, 0,
                                0, 1, 0, 0.5,
                                0, 0, 0, 1});
}

inline PoEModel rrpr_poe() {
    PoEModel m;
    m.m = rrpr_home_pose();
    m.screws = {
        Screw(Vec3(0, 0, 1), Vec3(0, 0, 0)),
        Screw(Vec3(0, 1, 0), Vec3(-0.2, 0, 0)),
        Screw(Vec3(0, 0, 0), Vec3(0, 1, 0)),
        Screw(Vec3(0, -1, 0), Vec3(0.5, 0, -0.2)),
    };
    return m;
}

inline std::vector<JointKind> rrpr_kinds() {
    return {JointKind::Revolute, JointKind::Revolute, JointKind::Prismatic,
            JointKind::Revolute};
}

/// Hand-written DH table of the RRPR arm (the source model the screws
/// and the reference RPY chain correspond to).
inline DHModel rrpr_dh() {
    DHModel m;
    m.base_row = DHRow{0, 0, 0, 0, JointKind::Revolute};
    m.rows = {
        DHRow{0, 0.2, -kPi / 2, 0, JointKind::Revolute},
        DHRow{0.3, 0, 0, -kPi / 2, JointKind::Revolute},
        DHRow{0.2, 0, kPi, kPi / 2, JointKind::Prismatic},
        DHRow{0.1, 0, 0, 0, JointKind::Revolute},
    };
    return m;
}

/// The same table with every quarter-turn halved (a popular misprint of
/// this arm). Does NOT reproduce rrpr_home_pose(); kept as a guard.
inline DHModel rrpr_dh_misprint() {
    DHModel m = rrpr_dh();
    m.rows[0].alpha = -kPi / 4;
    m.rows[1].theta = -kPi / 4;
    m.rows[2].theta = kPi / 4;
    return m;
}

/// Misprinted table with only alpha_1 repaired; its joint-4 axis still
/// sits away from the screw model's joint-4 axis.
inline DHModel rrpr_dh_misprint_alpha_fixed() {
    DHModel m = rrpr_dh_misprint();
    m.rows[0].alpha = -kPi / 2;
    return m;
}

/// Joint-4 axis of the screw model: through (0.2, 0, 0.5) along -y.
inline Vec3 rrpr_joint4_axis_point() { return Vec3(0.2, 0, 0.5); }
inline Vec3 rrpr_joint4_axis_dir() { return Vec3(0, -1, 0); }

/// RPY-XYZ chain of the hand-written DH table (reference output).
inline RpyXyzModel rrpr_rpy_reference() {
    RpyXyzModel m;
    m.rows = {
        RpyXyzRow(0, 0, 0, 0, 0, 0),
        RpyXyzRow(0, 0, 0, 0, 0, 0),
        RpyXyzRow(-kPi / 2, 0, 0, 0, 0, 0.2),
        RpyXyzRow(0, 0, -kPi / 2, 0, -0.3, 0),
        RpyXyzRow(kPi, 0, kPi / 2, 0, 0.2, 0),
        RpyXyzRow(0, 0, 0, 0.1, 0, 0),
    };
    m.kinds = rrpr_kinds();
    return m;
}

/// theta of the re-derived rows 3/4: pi - atan2(0.3, 0.2).
inline double rrpr_theta3() { return 2.1587989303424644; }
/// |a_3| of the re-derived table: hypot(0.2, 0.3).
inline double rrpr_a3_abs() { return 0.36055512754639896; }

/// DH table recovered from the screws (frozen oracle); the prismatic
/// axis position is unrecoverable from a screw, so rows 2..4 differ from
/// rrpr_dh() while forward kinematics agrees.
inline DHModel rrpr_dh_from_screws_expected() {
    DHModel m;
    m.base_row = DHRow{0, 0, 0, 0, JointKind::Revolute};
    m.rows = {
        DHRow{0, 0.2, -kPi / 2, 0, JointKind::Revolute},
        DHRow{0, 0, 0, 0, JointKind::Revolute},
        DHRow{-0.36055512754639896, 0, kPi, 2.1587989303424644, JointKind::Prismatic},
        DHRow{0.1, 0, 0, 2.1587989303424644, JointKind::Revolute},
    };
    return m;
}

/// RPY-XYZ chain recovered from the screws (frozen oracle).
inline RpyXyzModel rrpr_rpy_from_screws_expected() {
    RpyXyzModel m;
    m.rows = {
        RpyXyzRow(0, 0, 0, 0, 0, 0),
        RpyXyzRow(0, 0, 0, 0, 0, 0),
        RpyXyzRow(-kPi / 2, 0, 0, 0, 0, 0.2),
        RpyXyzRow(0, 0, 0, 0, 0, 0),
        RpyXyzRow(kPi, 0, 2.1587989303424644, 0.2, -0.3, 0),
        RpyXyzRow(0, 0, 2.1587989303424644, -0.055470019622522737,
                  0.083205029433784314, 0),
    };
    m.kinds = rrpr_kinds();
    return m;
}

/// Displayed arm configuration used for cross-representation checks.
inline kinconv::JointDisplacements rrpr_pose_q() {
    return {3 * kPi / 4, -kPi / 4, 0.3, -3 * kPi / 4};
}

// ---------------------------------------------------------------------------
// 3R arm with arbitrarily placed joint axes.
// ---------------------------------------------------------------------------

/// Home pose with the printed rotation digits replaced by the nearest
/// rotation matrix (the printed three decimals are not orthonormal).
inline Transform threer_home_pose() {
    return transform_from_rows(
        {0.82613145004834565, -0.073247563484700615, -0.55869635911161364, 0.05,
         -0.37306353796870451, -0.8141802706820539, -0.44489783486815382, -0.4,
         -0.42229187048686034, 0.57597333382340954, -0.69994592280050882, 0.4,
         0, 0, 0, 1});
}

/// Home pose exactly as printed (three decimals per entry).
inline Transform threer_home_pose_printed() {
    return transform_from_rows({0.826, -0.073, -0.558, 0.05,
                                -0.373, -0.814, -0.444, -0.4,
                                -0.422, 0.576, -0.699, 0.4,
                                0, 0, 0, 1});
}

/// Screws and pose as printed: directions only unit to three decimals,
/// so they fail strict validation on purpose.
inline PoEModel threer_poe_raw() {
    PoEModel m;
    m.m = threer_home_pose_printed();
    m.screws = {
        Screw(Vec3(-0.549, -0.099, 0.829), Vec3(0, 0, 0)),
        Screw(Vec3(-0.635, 0.495, 0.592), Vec3(-0.057, -0.182, 0.090)),
        Screw(Vec3(-0.280, 0.790, 0.544), Vec3(-0.117, -0.206, 0.238)),
    };
    return m;
}

/// The same screws normalized (unit omega, pitch component removed).
inline PoEModel threer_poe() {
    PoEModel m;
    m.m = threer_home_pose();
    m.screws = {
        Screw(Vec3(-0.54942789624071864, -0.099077161617178763, 0.82964613111758767),
              Vec3(0, 0, 0)),
        Screw(Vec3(-0.63540869923268117, 0.49531859231523967, 0.59238102353660982),
              Vec3(-0.057427965923326246, -0.18181212581144904, 0.090422709316478236)),
        Screw(Vec3(-0.28021921717528697, 0.79061850560170255, 0.54442590765484322),
              Vec3(-0.11723417581113689, -0.20575901786682202, 0.23846333619057181)),
    };
    return m;
}

/// DH table recovered from the screws (frozen oracle).
inline DHModel threer_dh_expected() {
    DHModel m;
    m.base_row = DHRow{0, 0, -0.59232278590883902, 1.749206826145937, JointKind::Revolute};
    m.rows = {
        DHRow{-0.20384803374586116, 0.089258198898293381, 0.6575317831159726,
              1.7603381761953856, JointKind::Revolute},
        DHRow{-0.07839998645017407, -0.32595620891354665, 0.4686710809706261,
              -0.86604742835795201, JointKind::Revolute},
        DHRow{-0.37782047993079215, 0.061110565323217014, -2.648574235070571,
              -1.8370026363282053, JointKind::Revolute},
    };
    m.tool = transform_from_rows(
        {0.6541608272412508, -0.35797320854362413, -0.66627981664464808, 0,
         0.3579732085436233, 0.92253182645563414, -0.14418811026369302,
         0.32018242088710375,
         0.6662798166446483, -0.14418811026369194, 0.73162900078561666,
         -0.17202491454930369,
         0, 0, 0, 1});
    return m;
}

/// RPY-XYZ chain recovered from the screws (frozen oracle).
inline RpyXyzModel threer_rpy_expected() {
    RpyXyzModel m;
    m.rows = {
        RpyXyzRow(0, 0, 0, 0, 0, 0),
        RpyXyzRow(-0.59232278590883902, 0, 1.749206826145937, 0, 0, 0),
        RpyXyzRow(0.6575317831159726, 0, 1.7603381761953856, 0.038406797940506325,
                  -0.20019724956654841, 0.089258198898293381),
        RpyXyzRow(0.4686710809706261, 0, -0.86604742835795168, -0.050790848494764701,
                  0.059723090882583568, -0.32595620891354665),
        RpyXyzRow(-2.6485742350705701, 0.85772373456538697, -1.8370026363282053,
                  -0.2512711653844526, 0.460130927424244, 0.061110565323216834),
    };
    m.kinds = {JointKind::Revolute, JointKind::Revolute, JointKind::Revolute};
    return m;
}

/// Published DH table for the 3R arm; self-consistent with the printed
/// pose only to about 2e-3 (three printed decimals).
inline DHModel threer_dh_printed() {
    DHModel m;
    m.base_row = DHRow{0, 0, -0.592, 1.7502, JointKind::Revolute};
    m.rows = {
        DHRow{-0.204, 0.088, 0.658, 1.758, JointKind::Revolute},
        DHRow{-0.078, -0.325, 0.467, -0.866, JointKind::Revolute},
        DHRow{-0.515, 0.314, -2.184, -1.743, JointKind::Revolute},
    };
    m.tool = transform_from_rows({0.651, -0.438, -0.619, 0.105,
                                  0.653, 0.739, 0.163, 0.394,
                                  0.386, -0.511, 0.767, -0.121,
                                  0, 0, 0, 1});
    return m;
}

/// Published RPY-XYZ chain for the 3R arm (composes to the home pose to
/// about 1e-3; its intermediate frames follow a different x-axis pick).
inline RpyXyzModel threer_rpy_printed() {
    RpyXyzModel m;
    m.rows = {
        RpyXyzRow(0, 0, 0, 0, 0, 0),
        RpyXyzRow(0.0998, -0.5851, 0, 0, 0, 0),
        RpyXyzRow(0.6423, 0.1577, -3.0111, 0.2071, 0.0272, 0.0332),
        RpyXyzRow(0.3616, -0.3037, 0.0622, -0.1089, -0.0199, -0.1006),
        RpyXyzRow(-2.6489, 0.8582, -2.5611, 0.1168, 0.5115, -0.1124),
    };
    m.kinds = {JointKind::Revolute, JointKind::Revolute, JointKind::Revolute};
    return m;
}

} // namespace fixtures
