#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/numeric.hpp"

namespace seqspace {

/// One row of an infinite matrix operator.  Only rows whose tail is summable
/// by construction are representable: finite support (explicit entries or a
/// banded closed form) or a closed form carrying a geometric decay
/// certificate |a_k| <= magnitude * ratio^k for k >= from.
template <class S>
class OperatorRow {
 public:
  struct DecayCertificate {
    double magnitude = 0.0;
    double ratio = 0.0;  // in [0, 1)
    std::size_t from = 0;
  };

  static OperatorRow finite(std::vector<std::pair<std::size_t, S>> entries) {
    OperatorRow row;
    std::size_t end = 0;
    for (auto& [k, v] : entries) end = std::max(end, k);
    row.support_end_ = entries.empty() ? std::optional<std::size_t>(0)
                                       : std::optional<std::size_t>(end);
    row.entries_ = std::move(entries);
    return row;
  }

  static OperatorRow zero() { return finite({}); }

  static OperatorRow banded(std::size_t first, std::size_t last,
                            std::function<S(std::size_t)> f) {
    if (last < first)
      raise(errc::invalid_config, "banded row with empty support range");
    OperatorRow row;
    row.first_ = first;
    row.support_end_ = last;
    row.f_ = std::move(f);
    return row;
  }

  static OperatorRow geometric_decay(std::function<S(std::size_t)> f,
                                     DecayCertificate cert) {
    if (!(cert.ratio >= 0.0) || !(cert.ratio < 1.0))
      raise(errc::invalid_config,
            "decay certificate needs a ratio in [0, 1), got " +
                std::to_string(cert.ratio));
    OperatorRow row;
    row.f_ = std::move(f);
    row.decay_ = cert;
    return row;
  }

  S entry(std::size_t k) const {
    if (f_) {
      if (support_end_ && (k < first_ || k > *support_end_))
        return scalar_of<S>(0);
      return f_(k);
    }
    for (const auto& [idx, v] : entries_)
      if (idx == k) return v;
    return scalar_of<S>(0);
  }

  bool finitely_supported() const noexcept { return support_end_.has_value(); }
  std::optional<std::size_t> support_end() const noexcept {
    return support_end_;
  }
  const std::optional<DecayCertificate>& decay() const noexcept {
    return decay_;
  }

 private:
  OperatorRow() = default;
  std::vector<std::pair<std::size_t, S>> entries_;
  std::function<S(std::size_t)> f_;
  std::size_t first_ = 0;
  std::optional<std::size_t> support_end_;
  std::optional<DecayCertificate> decay_;
};

enum class TargetKind { c0, c, l_inf, l_q, l1, bv };

struct TargetSpace {
  TargetKind kind = TargetKind::c0;
  double q = 0.0;  // only for l_q

  static TargetSpace parse(const std::string& name, double q = 0.0) {
    if (name == "c0") return {TargetKind::c0, 0.0};
    if (name == "c") return {TargetKind::c, 0.0};
    if (name == "linf" || name == "l_inf") return {TargetKind::l_inf, 0.0};
    if (name == "l1" || name == "l_1") return {TargetKind::l1, 0.0};
    if (name == "bv") return {TargetKind::bv, 0.0};
    if (name == "lq" || name == "l_q") {
      if (!(q >= 1.0))
        raise(errc::bad_exponent, "l_q target needs q >= 1");
      return {TargetKind::l_q, q};
    }
    raise(errc::invalid_config,
          "unknown target space '" + name + "' (c0|c|linf|l1|lq|bv)");
  }

  std::string name() const {
    switch (kind) {
      case TargetKind::c0: return "c0";
      case TargetKind::c: return "c";
      case TargetKind::l_inf: return "linf";
      case TargetKind::l_q: return "lq(" + std::to_string(q) + ")";
      case TargetKind::l1: return "l1";
      case TargetKind::bv: return "bv";
    }
    return "?";
  }
};

/// A matrix operator out of the space: the row descriptors, the (constant)
/// source exponent p, and the intended target space.
template <class S>
struct OperatorSpec {
  std::vector<OperatorRow<S>> rows;
  double p = 2.0;
  TargetSpace target{};

  const OperatorRow<S>& row(std::size_t n) const {
    if (n >= rows.size())
      raise(errc::index_out_of_range, "operator row beyond specification");
    return rows[n];
  }

  void validate() const {
    if (!(p >= 1.0) || !std::isfinite(p))
      raise(errc::bad_exponent, "operator source exponent needs 1 <= p < inf");
    if (rows.empty()) raise(errc::invalid_config, "operator with no rows");
  }
};

}  // namespace seqspace
