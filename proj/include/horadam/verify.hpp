#pragma once

#include "horadam/identities.hpp"
#include "horadam/scalar_seq.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace horadam {

struct IndexRange {
    long long lo = 0;
    long long hi = 0;

    bool empty() const { return lo > hi; }
    long long size() const { return empty() ? 0 : hi - lo + 1; }
};

enum class OutputFormat { Human, Json, Csv };

/// One verification campaign: which identities, over which integer grid.
struct VerifyConfig {
    std::vector<IdentityId> ids;   // empty means all
    IndexRange p_range{-3, 3};
    IndexRange q_range{-3, 3};     // 0 is always excluded from iteration
    IndexRange a_range{-2, 2};
    IndexRange b_range{-2, 2};
    IndexRange idx_range{-6, 12};
    unsigned jobs = 0;             // 0 = hardware concurrency

    const std::vector<IdentityId>& effective_ids() const {
        static const std::vector<IdentityId> all(kAllIdentities.begin(), kAllIdentities.end());
        return ids.empty() ? all : ids;
    }

    /// Throws invalid_argument when no valid q remains.
    void validate() const {
        if (q_range.empty() || (q_range.lo == 0 && q_range.hi == 0))
            throw std::invalid_argument("verify: q grid contains no nonzero value");
    }
};

struct VerifySummary {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;

    std::uint64_t total() const { return passed + failed + skipped; }
};

/// The negative-index convention audit, reported with every campaign.
/// For (p, q) = (1, 2) and n = 2 the backward recurrence gives
/// F_{-2} = -1/4. The form -(-q)^{-n} F_n reproduces it; the variant
/// -(-q)^{n} F_n gives -4 and is therefore inconsistent with the
/// recurrence whenever |q| != 1.
struct NegIndexAudit {
    Rational p{1}, q{2};
    long long n = 2;
    Rational recurrence_value;       // F_{-n} by backward recurrence
    Rational reciprocal_power_form;  // -(-q)^{-n} F_n
    Rational plain_power_form;       // -(-q)^{n}  F_n
    bool reciprocal_power_agrees = false;
    bool plain_power_agrees = false;

    std::string describe() const {
        return "negative-index audit at p=" + p.str() + " q=" + q.str() +
               " n=" + std::to_string(n) + ": recurrence F(-n)=" + recurrence_value.str() +
               "; -(-q)^(-n)F(n)=" + reciprocal_power_form.str() +
               (reciprocal_power_agrees ? " (agrees)" : " (DISAGREES)") +
               "; -(-q)^n F(n)=" + plain_power_form.str() +
               (plain_power_agrees ? " (agrees)" : " (disagrees)");
    }
};

inline NegIndexAudit run_neg_index_audit() {
    NegIndexAudit audit;
    HoradamParams fib = fibonacci_params(audit.p, audit.q);
    audit.recurrence_value = horadam_term(fib, -audit.n);
    Rational fn = horadam_term(fib, audit.n);
    audit.reciprocal_power_form = -(pow(-audit.q, -audit.n) * fn);
    audit.plain_power_form = -(pow(-audit.q, audit.n) * fn);
    audit.reciprocal_power_agrees = audit.reciprocal_power_form == audit.recurrence_value;
    audit.plain_power_agrees = audit.plain_power_form == audit.recurrence_value;
    return audit;
}

namespace detail {

/// One work unit: a single identity at a single parameter set; the index
/// grid is swept inside. Units are enumerated in canonical order
/// (identity, p, q, a, b) and their reports are emitted in that order
/// regardless of worker scheduling.
struct VerifyUnit {
    IdentityId id;
    HoradamParams params;
    bool degenerate = false; // p^2 + 4q == 0: checks counted as skipped
};

inline std::vector<VerifyUnit> enumerate_units(const VerifyConfig& cfg) {
    std::vector<VerifyUnit> units;
    for (IdentityId id : cfg.effective_ids()) {
        bool seeds = identity_uses_seeds(id);
        for (long long p = cfg.p_range.lo; p <= cfg.p_range.hi; ++p) {
            for (long long q = cfg.q_range.lo; q <= cfg.q_range.hi; ++q) {
                if (q == 0) continue;
                bool degenerate = p * p + 4 * q == 0;
                if (!seeds) {
                    units.push_back(
                        {id, fibonacci_params(Rational(p), Rational(q)), degenerate});
                    continue;
                }
                for (long long a = cfg.a_range.lo; a <= cfg.a_range.hi; ++a)
                    for (long long b = cfg.b_range.lo; b <= cfg.b_range.hi; ++b)
                        units.push_back({id,
                                         {Rational(p), Rational(q), Rational(a), Rational(b)},
                                         degenerate});
            }
        }
    }
    return units;
}

inline std::uint64_t unit_check_count(const VerifyUnit& unit, const IndexRange& idx) {
    std::uint64_t span = static_cast<std::uint64_t>(idx.size());
    switch (identity_index_arity(unit.id)) {
        case 0: return 1;
        case 1: return span;
        case 2: return span * span;
        default: return span * span * span;
    }
}

inline void run_unit(const VerifyUnit& unit, const IndexRange& idx,
                     std::vector<IdentityReport>& out) {
    IdentityChecker checker(unit.params);
    switch (unit.id) {
        case IdentityId::Lemma1AlphaBeta: out.push_back(checker.lemma1_alpha_beta()); return;
        case IdentityId::Lemma1BetaAlpha: out.push_back(checker.lemma1_beta_alpha()); return;
        case IdentityId::Lemma1Sum: out.push_back(checker.lemma1_sum()); return;
        case IdentityId::Lemma2Alpha: out.push_back(checker.lemma2_alpha()); return;
        case IdentityId::Lemma2Beta: out.push_back(checker.lemma2_beta()); return;
        case IdentityId::Cassini:
            for (long long m = idx.lo; m <= idx.hi; ++m) out.push_back(checker.cassini(m));
            return;
        case IdentityId::CommutatorAdjacent:
            for (long long n = idx.lo; n <= idx.hi; ++n)
                out.push_back(checker.commutator_adjacent(n));
            return;
        case IdentityId::SquareDiff:
            for (long long n = idx.lo; n <= idx.hi; ++n) out.push_back(checker.square_diff(n));
            return;
        case IdentityId::MixedCommutatorDiag:
            for (long long n = idx.lo; n <= idx.hi; ++n)
                out.push_back(checker.mixed_commutator_diag(n));
            return;
        case IdentityId::Catalan:
            for (long long m = idx.lo; m <= idx.hi; ++m)
                for (long long n = idx.lo; n <= idx.hi; ++n)
                    out.push_back(checker.catalan(m, n));
            return;
        case IdentityId::DOcagne:
            for (long long n = idx.lo; n <= idx.hi; ++n)
                for (long long m = idx.lo; m <= idx.hi; ++m)
                    out.push_back(checker.docagne(n, m));
            return;
        case IdentityId::MixedCommutator:
            for (long long n = idx.lo; n <= idx.hi; ++n)
                for (long long m = idx.lo; m <= idx.hi; ++m)
                    out.push_back(checker.mixed_commutator(n, m));
            return;
        case IdentityId::CrossLucasFib:
            for (long long n = idx.lo; n <= idx.hi; ++n)
                for (long long r = idx.lo; r <= idx.hi; ++r)
                    for (long long s = idx.lo; s <= idx.hi; ++s)
                        out.push_back(checker.cross_lucas_fib(n, r, s));
            return;
    }
}

} // namespace detail

/// Runs the campaign and feeds every report to `sink` in canonical order.
/// Workers evaluate whole units; a reorder buffer serializes emission, so
/// the stream is identical for any job count.
inline VerifySummary run_verify(const VerifyConfig& cfg,
                                const std::function<void(const IdentityReport&)>& sink) {
    cfg.validate();
    std::vector<detail::VerifyUnit> units = detail::enumerate_units(cfg);
    VerifySummary summary;

    unsigned jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    if (jobs > 1 && units.size() < 2) jobs = 1;

    auto account = [&](const std::vector<IdentityReport>& reports) {
        for (const IdentityReport& rep : reports) {
            if (rep.passed())
                ++summary.passed;
            else
                ++summary.failed;
            if (sink) sink(rep);
        }
    };

    if (jobs <= 1) {
        for (const auto& unit : units) {
            if (unit.degenerate) {
                summary.skipped += detail::unit_check_count(unit, cfg.idx_range);
                continue;
            }
            std::vector<IdentityReport> reports;
            detail::run_unit(unit, cfg.idx_range, reports);
            account(reports);
        }
        return summary;
    }

    std::atomic<size_t> next{0};
    std::mutex mu;
    std::condition_variable cv_done;
    std::condition_variable cv_space;
    std::map<size_t, std::vector<IdentityReport>> done;
    size_t emit_base = 0; // lowest unit index not yet emitted
    const size_t window = 4 * static_cast<size_t>(jobs);

    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= units.size()) return;
            {
                // keep the reorder buffer bounded: stay close to the emitter
                std::unique_lock lock(mu);
                cv_space.wait(lock, [&] { return i < emit_base + window; });
            }
            std::vector<IdentityReport> reports;
            if (!units[i].degenerate) detail::run_unit(units[i], cfg.idx_range, reports);
            {
                std::scoped_lock lock(mu);
                done.emplace(i, std::move(reports));
            }
            cv_done.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

    for (size_t i = 0; i < units.size(); ++i) {
        std::vector<IdentityReport> reports;
        {
            std::unique_lock lock(mu);
            cv_done.wait(lock, [&] { return done.count(i) != 0; });
            reports = std::move(done[i]);
            done.erase(i);
            emit_base = i + 1;
        }
        cv_space.notify_all();
        if (units[i].degenerate)
            summary.skipped += detail::unit_check_count(units[i], cfg.idx_range);
        else
            account(reports);
    }
    for (auto& t : pool) t.join();
    return summary;
}

} // namespace horadam
