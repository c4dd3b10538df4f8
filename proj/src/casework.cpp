#include "hf/casework.hpp"

#include <algorithm>
#include <functional>

#include "hf/errors.hpp"
#include "hf/gorenstein.hpp"
#include "hf/graded.hpp"

namespace hf::casework {

namespace {

constexpr int kNVars = 4;  // the section ring has four variables

Int dim_s(int t) { return graded_dim(kNVars, t); }

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::RejectedUnimodal: return "RejectedUnimodal";
        case Verdict::RejectedStanley: return "RejectedStanley";
        case Verdict::RejectedDegreeArgument: return "RejectedDegreeArgument";
        case Verdict::Survives: return "Survives";
    }
    return "?";
}

BoundsProfile kloosterman_bounds(int d) {
    if (d < 6) throw InputError("kloosterman_bounds: d must be at least 6");
    BoundsProfile b;
    b.d = d;
    const int N = 2 * d - 4;
    std::vector<Int> lower(static_cast<size_t>(N) + 1);
    auto base = [&](int k) -> Int {
        if (k == 0) return 1;
        if (k == 1) return 3;
        if (k <= d - 4) return 2 * k + 2;
        return 2 * d - 6;  // d-3 <= k <= d-1, and k = d-2 by the same range
    };
    for (int k = 0; k <= N; ++k) lower[static_cast<size_t>(k)] = base(std::min(k, N - k));
    b.lower = HVector(std::move(lower));
    b.lower_sum = b.lower.sum();
    b.cap = 2 * Int(d - 2) * Int(d - 1);
    b.shadow_2d7 = macaulay::lower_shadow(Int(2 * d - 7), d - 4).value;
    b.shadow_2d6 = macaulay::lower_shadow(Int(2 * d - 6), d).value;
    return b;
}

std::vector<HVector> enumerate_exceptional(int d) {
    BoundsProfile b = kloosterman_bounds(d);
    Int slack = b.cap - b.lower_sum;  // = 14 - 2d
    std::vector<HVector> out;
    if (slack < 0) return out;

    const int N = 2 * d - 4;
    const int mid = d - 2;
    // Free increments at degrees 1..mid; degree k < mid counts twice by
    // symmetry, the middle once. h_0 = 1 is pinned.
    std::vector<Int> delta(static_cast<size_t>(mid) + 1, 0);
    std::vector<HVector> found;
    auto emit = [&]() {
        std::vector<Int> v(static_cast<size_t>(N) + 1);
        for (int k = 0; k <= N; ++k) {
            int kk = std::min(k, N - k);
            v[static_cast<size_t>(k)] = b.lower.at(static_cast<size_t>(k)) +
                                        (kk >= 1 ? delta[static_cast<size_t>(kk)] : 0);
        }
        found.emplace_back(std::move(v));
    };
    std::function<void(int, Int)> rec = [&](int k, Int rem) {
        if (k > mid) {
            emit();
            return;
        }
        int w = (k < mid) ? 2 : 1;
        for (Int x(0); x * w <= rem; ++x) {
            delta[static_cast<size_t>(k)] = x;
            rec(k + 1, rem - x * w);
        }
        delta[static_cast<size_t>(k)] = 0;
    };
    rec(1, slack);
    std::sort(found.begin(), found.end(),
              [](const HVector& a, const HVector& c) { return a.v < c.v; });
    return found;
}

CaseState derive_facts(const HVector& h, int d) {
    if (d < 6) throw InputError("derive_facts: d must be at least 6");
    const int N = 2 * d - 4;
    if (h.socle_degree() != N)
        throw InputError("derive_facts: h must have socle degree 2d-4");
    if (!gorenstein::is_symmetric(h)) throw InputError("derive_facts: h must be symmetric");

    CaseState st;
    st.h = h;
    st.d = d;
    const int tmax = d - 1;
    st.dmin.assign(static_cast<size_t>(tmax) + 1, -1);  // index by t, slot 0 unused
    st.dmax.assign(static_cast<size_t>(tmax) + 1, kNVars - 1);

    auto dim_ideal = [&](int t) -> Int { return dim_s(t) - h.at(static_cast<size_t>(t)); };

    for (int t = 1; t <= tmax; ++t) {
        Int dI = dim_ideal(t);
        if (dI < 0) {
            st.contradiction = true;
            st.trace.push_back("degree " + std::to_string(t) + ": h exceeds dim S_t");
            return st;
        }
        if (dI == 0) {
            st.dmin[static_cast<size_t>(t)] = st.dmax[static_cast<size_t>(t)] = kNVars - 1;
        } else {
            st.dmax[static_cast<size_t>(t)] = 2;  // R3
        }
    }

    // R4: a single linear generator f; compare dim I_t with dim (f)_t.
    const bool single_linear = (dim_ideal(1) == 1);
    if (single_linear) {
        for (int t = 1; t <= tmax; ++t) {
            Int dI = dim_ideal(t);
            Int dF = dim_s(t - 1);
            if (dI < dF) {
                st.contradiction = true;
                st.trace.push_back("degree " + std::to_string(t) +
                                   ": dim I_t below dim (f)_t with a linear form present");
                return st;
            }
            if (dI == dF) {
                st.dmin[static_cast<size_t>(t)] = 2;
                st.dmax[static_cast<size_t>(t)] = std::min(st.dmax[static_cast<size_t>(t)], 2);
                st.trace.push_back("R4: dim I_" + std::to_string(t) + " = dim (f)_" +
                                   std::to_string(t) + ", base locus is the hyperplane (dim 2)");
            } else {
                st.dmax[static_cast<size_t>(t)] = std::min(st.dmax[static_cast<size_t>(t)], 1);
                st.trace.push_back("R4: dim I_" + std::to_string(t) + " > dim (f)_" +
                                   std::to_string(t) + ", dim Bs <= 1");
            }
        }
    }

    // R1: empty base locus in degree d-1.
    st.dmax[static_cast<size_t>(tmax)] = -1;
    st.trace.push_back("R1: Bs|I_" + std::to_string(tmax) + "| empty (axiom of this branch)");

    // R2: plateau propagation, walked down from the axiom. Conclusions are
    // only drawn down to degree 2d-9; deeper levels stay interval-valued.
    const int floor = 2 * d - 9;
    for (int k = tmax; k >= 2; --k) {
        if (st.dmax[static_cast<size_t>(k)] != -1) break;
        if (k - 1 < floor) break;
        if (!(h.at(static_cast<size_t>(k)) == h.at(static_cast<size_t>(k) - 1) &&
              h.at(static_cast<size_t>(k) - 1) == h.at(static_cast<size_t>(k) - 2)))
            break;
        st.dmax[static_cast<size_t>(k) - 1] = -1;
        st.trace.push_back("R2: h(" + std::to_string(k) + ")=h(" + std::to_string(k - 1) +
                           ")=h(" + std::to_string(k - 2) + ") and Bs|I_" + std::to_string(k) +
                           "| empty => Bs|I_" + std::to_string(k - 1) + "| empty");
    }

    // R5: monotonicity of the true dimension in t.
    for (int t = 2; t <= tmax; ++t)
        st.dmax[static_cast<size_t>(t)] =
            std::min(st.dmax[static_cast<size_t>(t)], st.dmax[static_cast<size_t>(t) - 1]);
    for (int t = tmax - 1; t >= 1; --t)
        st.dmin[static_cast<size_t>(t)] =
            std::max(st.dmin[static_cast<size_t>(t)], st.dmin[static_cast<size_t>(t) + 1]);

    for (int t = 1; t <= tmax; ++t) {
        if (st.dmin[static_cast<size_t>(t)] > st.dmax[static_cast<size_t>(t)]) {
            st.contradiction = true;
            st.trace.push_back("degree " + std::to_string(t) + ": empty dimension interval");
            return st;
        }
    }

    // d_k intervals: first degree where the dimension possibly / certainly
    // drops to k or below.
    for (int k = kNVars - 2; k >= -1; --k) {
        CaseState::Interval iv{0, 0};
        for (int t = 1; t <= tmax; ++t) {
            if (st.dmin[static_cast<size_t>(t)] <= k) {
                iv.lo = t;
                break;
            }
        }
        for (int t = 1; t <= tmax; ++t) {
            if (st.dmax[static_cast<size_t>(t)] <= k) {
                iv.hi = t;
                break;
            }
        }
        st.dk.push_back(iv);
    }
    return st;
}

DegreeArgument degree_argument(const CaseState& st, int d) {
    DegreeArgument out;
    const int N = 2 * d - 4;
    const Int threshold = Int(N) + kNVars;  // N + n + 1 with n + 1 variables

    if (st.contradiction) {
        out.verdict = Verdict::RejectedDegreeArgument;
        out.trace.push_back("derived facts are contradictory; no configuration realizes h");
        return out;
    }

    int max_sum = 0;
    for (const auto& iv : st.dk) max_sum += iv.hi;
    std::vector<int> tuple(st.dk.size());
    bool any_viable = false;

    std::function<void(size_t, int)> rec = [&](size_t pos, int min_allowed) {
        if (pos == st.dk.size()) {
            Int sum(0);
            for (int x : tuple) sum += x;
            if (sum < threshold) return;
            any_viable = true;
            std::string tup = "(";
            for (size_t i = 0; i < tuple.size(); ++i)
                tup += (i ? "," : "") + std::to_string(tuple[i]);
            tup += ")";
            if (sum == threshold) {
                // Boundary: the contained complete intersection has the same
                // socle degree, so the ideal would equal it; compare series.
                gorenstein::CIDegrees cid;
                cid.degrees = tuple;
                HVector series = gorenstein::ci_hilbert_series(cid);
                if (series == st.h) {
                    out.surviving_tuples.push_back(tuple);
                    out.trace.push_back("tuple " + tup + ": CI series matches h; survives");
                } else {
                    int witness = -1;
                    for (size_t j = 0; j < std::max(series.size(), st.h.size()); ++j) {
                        if (series.at(j) != st.h.at(j)) {
                            witness = static_cast<int>(j);
                            break;
                        }
                    }
                    out.trace.push_back("tuple " + tup + ": socle degrees equal but CI series " +
                                        format_hvector(series) + " differs from h at degree " +
                                        std::to_string(witness) + "; killed");
                }
            } else {
                out.surviving_tuples.push_back(tuple);
                out.trace.push_back("tuple " + tup + ": sum exceeds " + threshold.get_str() +
                                    "; not excluded");
            }
        } else {
            const auto& iv = st.dk[pos];
            for (int v = std::max(iv.lo, min_allowed); v <= iv.hi; ++v) {
                tuple[pos] = v;
                rec(pos + 1, v);
            }
        }
    };
    rec(0, 1);

    if (!any_viable) {
        out.trace.push_back("no tuple reaches sum " + threshold.get_str() + " (max possible " +
                            std::to_string(max_sum) + "); the required complete intersection " +
                            "cannot exist");
    }
    out.verdict = out.surviving_tuples.empty() ? Verdict::RejectedDegreeArgument : Verdict::Survives;
    return out;
}

FilterReport filter_pipeline(int d) {
    FilterReport rep;
    rep.d = d;
    rep.bounds = kloosterman_bounds(d);
    std::vector<HVector> vectors = enumerate_exceptional(d);

    for (const HVector& h : vectors) {
        VectorReport vr;
        vr.h = h;
        vr.sum = h.sum();
        if (!gorenstein::is_unimodal(h)) {
            vr.verdict = Verdict::RejectedUnimodal;
            vr.trace.push_back("not unimodal: increases strictly after a strict decrease");
        } else {
            auto sv = gorenstein::stanley_admissible(h);
            if (sv == gorenstein::StanleyVerdict::NotAdmissible) {
                vr.verdict = Verdict::RejectedStanley;
                int t = h.socle_degree() / 2;
                std::vector<Int> diff{h.at(0)};
                for (int k = 1; k <= t; ++k)
                    diff.push_back(h.at(static_cast<size_t>(k)) - h.at(static_cast<size_t>(k) - 1));
                std::string ds = "(";
                for (size_t i = 0; i < diff.size(); ++i) ds += (i ? "," : "") + diff[i].get_str();
                ds += ")";
                vr.trace.push_back("no artinian Gorenstein ring: difference sequence " + ds +
                                   " is not an O-sequence");
            } else {
                if (sv == gorenstein::StanleyVerdict::Inapplicable)
                    vr.trace.push_back("h_1 > 3: Stanley criterion inapplicable; passed through");
                CaseState st = derive_facts(h, d);
                DegreeArgument da = degree_argument(st, d);
                vr.verdict = da.verdict;
                for (auto& line : st.trace) vr.trace.push_back(line);
                for (auto& line : da.trace) vr.trace.push_back(line);
                if (da.verdict == Verdict::Survives) ++rep.survivors;
            }
        }
        rep.vectors.push_back(std::move(vr));
    }

    std::string bound = "sum h > 2(d-2)(d-1) = " + rep.bounds.cap.get_str();
    if (vectors.empty()) {
        rep.conclusion = "no exceptional h-vectors exist: the node-count bound " + bound +
                         " holds outright on this branch";
    } else if (rep.survivors == 0) {
        rep.conclusion = "all exceptional h-vectors rejected: the node-count bound " + bound +
                         " stands on this branch";
    } else {
        rep.conclusion = std::to_string(rep.survivors) +
                         " h-vector(s) not excluded; the bound is not established";
    }
    rep.cited_facts = {
        "assumption of this branch: Bs|I_(d-1)| is empty (the Jacobian ideal is generated in "
        "degree d-1 and its section has empty zero locus)",
        "cited, not mechanized: if h(d-4) <= 2d-7 the singular set contains a complete "
        "intersection of multidegree (1,1,d-1,d-1) or (1,2,d-2,d-1)",
        "cited, not mechanized: the dichotomy - multidegree (1,1,d-1,d-1) forces a plane and "
        "at least (d-1)^2 nodes; multidegree (1,2,d-2,d-1) forces a quadric surface and "
        "exactly 2(d-2)(d-1) nodes",
    };
    return rep;
}

Int node_count_bound(const HVector& h) { return h.sum(); }

}  // namespace hf::casework
