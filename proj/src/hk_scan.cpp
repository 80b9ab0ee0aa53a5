#include "conifold/hk.hpp"

namespace conifold::hk {

namespace {

MetricScanRow scanOne(const FiberPoint& p, const HkOptions& o) {
    MetricScanRow row;
    row.p = p;
    try {
        row.metric = metricGN(p, o);
        row.positiveDefinite = positiveDefinite(row.metric.g);
        row.ok = true;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<MetricScanRow> metricScan(const std::vector<FiberPoint>& pts, const HkOptions& o, Exec mode) {
    std::vector<MetricScanRow> rows(pts.size());
    const long n = long(pts.size());
    if (mode == Exec::Serial) {
        for (long i = 0; i < n; ++i) rows[i] = scanOne(pts[i], o);
        return rows;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) rows[i] = scanOne(pts[i], o);
    return rows;
}

}  // namespace conifold::hk
