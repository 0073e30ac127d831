#include <benchmark/benchmark.h>

#include "kinconv/convert.hpp"
#include "kinconv/io.hpp"
#include "kinconv/kinematics.hpp"
#include "kinconv/urdf.hpp"

using namespace kinconv;

namespace {

/// Deterministic 8-joint chain with mixed kinds and non-orthogonal axes.
DHModel chain8() {
    DHModel m;
    m.base_row = DHRow{0.05, 0.1, 0.2, -0.3, JointKind::Revolute};
    for (int i = 0; i < 8; ++i) {
        DHRow r;
        r.a = 0.1 + 0.03 * i;
        r.d = 0.05 * (i % 3);
        r.alpha = -1.2 + 0.4 * i;
        r.theta = 0.7 - 0.25 * i;
        r.kind = i % 3 == 2 ? JointKind::Prismatic : JointKind::Revolute;
        m.rows.push_back(r);
    }
    m.tool = rot_y(0.4) * translation(0.02, -0.01, 0.08);
    return m;
}

JointDisplacements q8() { return {0.3, -1.1, 0.2, 0.8, -0.4, 0.1, 1.3, -0.7}; }

} // namespace

static void BM_FkDh(benchmark::State& state) {
    const DHModel m = chain8();
    const JointDisplacements q = q8();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fk_dh(m, q));
    }
}
BENCHMARK(BM_FkDh);

static void BM_FkPoe(benchmark::State& state) {
    const PoEModel m = gjd_to_poe(dh_to_gjd(chain8()));
    const JointDisplacements q = q8();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fk_poe(m, q));
    }
}
BENCHMARK(BM_FkPoe);

static void BM_FkGjd(benchmark::State& state) {
    const GJDModel m = dh_to_gjd(chain8());
    const JointDisplacements q = q8();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fk_gjd(m, q));
    }
}
BENCHMARK(BM_FkGjd);

static void BM_DhToGjd(benchmark::State& state) {
    const DHModel m = chain8();
    for (auto _ : state) {
        benchmark::DoNotOptimize(dh_to_gjd(m));
    }
}
BENCHMARK(BM_DhToGjd);

static void BM_GjdToDh(benchmark::State& state) {
    const GJDModel g = poe_to_gjd(gjd_to_poe(dh_to_gjd(chain8())));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gjd_to_dh(g));
    }
}
BENCHMARK(BM_GjdToDh);

static void BM_PoeToDhRoundTrip(benchmark::State& state) {
    const PoEModel m = gjd_to_poe(dh_to_gjd(chain8()));
    const AnyModel any(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convert(any, Representation::DH));
    }
}
BENCHMARK(BM_PoeToDhRoundTrip);

static void BM_SerializeParse(benchmark::State& state) {
    ModelDocument doc;
    doc.name = "chain8";
    doc.model = dh_to_gjd(chain8());
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_model(serialize_model(doc)));
    }
}
BENCHMARK(BM_SerializeParse);

static void BM_ExportUrdf(benchmark::State& state) {
    const RpyXyzModel m = gjd_to_rpyxyz(dh_to_gjd(chain8()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(export_urdf(m, "chain8"));
    }
}
BENCHMARK(BM_ExportUrdf);

BENCHMARK_MAIN();
