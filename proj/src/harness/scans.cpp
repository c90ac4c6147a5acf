#include <algorithm>

#include "harness/common.hpp"
#include "kmatch/combinat.hpp"
#include "kmatch/constructions.hpp"
#include "kmatch/errors.hpp"

namespace kmatch::harness {
namespace {

struct HiSizes {
  std::string listing;
  std::size_t best = 0;
  int best_i = 0;
  bool all_intersecting = true;
};

HiSizes hi_sizes(const UniversePtr& u, int t, std::optional<int> only = std::nullopt) {
  HiSizes h;
  const int n = u->parts().min();
  const int r = u->r();
  for (int i = 0; t + 2 * i <= n && t + i <= r; ++i) {
    if (only && *only != i) continue;
    const Family f = hi_family(u, t, i);
    h.listing += (h.listing.empty() ? "" : ";") + std::to_string(i) + ":" + std::to_string(f.size());
    h.all_intersecting = h.all_intersecting && family_satisfies(f, Predicate{PredicateKind::intersecting, t});
    if (f.size() > h.best) {
      h.best = f.size();
      h.best_i = i;
    }
  }
  return h;
}

Row failed_row(detail::CellOutcome& out) {
  out.row.verdict = Verdict::attention;
  out.row.note = out.error;
  return out.row;
}

}  // namespace

CampaignReport run_conjecture_scan(CampaignKind which, const Campaign& c) {
  if (which == CampaignKind::scan_tset || which == CampaignKind::scan_nonuniform) {
    Campaign probe = c;
    probe.mode = Expectation::record_only;
    return run_bound_campaign(probe);
  }

  CampaignReport rep;
  rep.name = c.name;
  rep.mode = Expectation::record_only;
  rep.meta = detail::campaign_meta(c);

  rep.rows = detail::map_cells(c.cells, c.workers, [&](const Cell& cell, unsigned inner) {
    ExtremalOptions opt = extremal_options(c);
    opt.workers = inner;
    if (which == CampaignKind::scan_ak_regime) opt.all_maxima = false;
    detail::CellOutcome out = detail::run_cell(cell, opt);
    if (!out.report) return failed_row(out);
    Row& row = out.row;
    const ExtremalReport& r = *out.report;
    const int t = cell.pred.t;
    const int rr = cell.sizes.front();
    row.verdict = Verdict::recorded;

    switch (which) {
      case CampaignKind::scan_hi: {
        const HiSizes h = hi_sizes(r.witness.universe_ptr(), t);
        row.set("H_sizes", h.listing).set("H_max", h.best).set("H_argmax", h.best_i);
        if (r.max_size != BigCount(h.best)) {
          row.verdict = Verdict::attention;
          row.note = "clique maximum " + r.max_size.str() + " differs from max_i |H_i| = " + std::to_string(h.best);
        } else if (!h.all_intersecting) {
          row.verdict = Verdict::attention;
          row.note = "an H_i family is not t-intersecting";
        }
        break;
      }
      case CampaignKind::scan_conj2: {
        // Parts (r, n): the threshold picks which H_l should be maximum.
        const int n = cell.parts.size(cell.parts.k() - 1);
        const int l = conj2_threshold(n, rr, t);
        const HiSizes predicted = hi_sizes(r.witness.universe_ptr(), t, l);
        const HiSizes all = hi_sizes(r.witness.universe_ptr(), t);
        row.set("threshold_l", l).set("H_l", predicted.best).set("H_sizes", all.listing);
        if (r.max_size != BigCount(predicted.best)) {
          row.verdict = Verdict::attention;
          row.note = "clique maximum " + r.max_size.str() + " differs from |H_l| = " + std::to_string(predicted.best);
        }
        break;
      }
      case CampaignKind::scan_ak_regime: {
        const int n = cell.parts.size(0);
        BigCount best;
        std::string listing;
        for (int i = 0; t + 2 * i <= n; ++i) {
          const BigCount s = ak_family_size(n, rr, t, i);
          listing += (listing.empty() ? "" : ";") + std::to_string(i) + ":" + s.str();
          if (s > best) best = s;
        }
        const int threshold = (rr - t + 1) * (t + 1);
        const bool small = n < threshold;
        row.set("n", n).set("threshold", threshold).set("ak_sizes", listing).set("ak_max", best);
        row.set("regime", small ? "below threshold" : "at or above threshold");
        const bool status_ok = (r.status == BoundStatus::exceeds) == small;
        if (r.max_size != best || !status_ok) {
          row.verdict = Verdict::attention;
          row.note = r.max_size != best ? "clique maximum differs from max_i |F_i|" : "status does not follow the threshold";
        }
        break;
      }
      default: throw InternalError("not a scan kind");
    }
    return row;
  });
  return rep;
}

}  // namespace kmatch::harness
