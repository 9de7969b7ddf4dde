#include "rising/builder.hpp"

#include <algorithm>
#include <cmath>

namespace rising {

long stage_of_strip(long m) {
    if (m <= 0) return 0;
    long k = static_cast<long>(std::sqrt(static_cast<double>(m)));
    while (k * k > m) --k;
    while ((k + 1) * (k + 1) <= m) ++k;
    return k;
}

namespace {

template <class S>
double as_double(const S& x) { return to_double(x); }

template <class S>
bool rows_ordered(const std::vector<S>& row) {
    for (std::size_t t = 1; t < row.size(); ++t) {
        if constexpr (is_exact_v<S>) {
            if (!(row[t - 1] < row[t])) return false;
        } else {
            if (row[t - 1] > row[t]) return false;
        }
    }
    return true;
}

}  // namespace

template <class S>
RisingBuilder<S>::RisingBuilder(IntervalFamily normalized, long max_stage)
    : family_(std::move(normalized)), grid_(DenseGrid::for_family(family_)), max_stage_(max_stage) {
    if (family_.members.empty() || !family_.members.front().set.is_point() ||
        family_.members.front().set.a != Rational(1, 2))
        throw Error(ErrorKind::ValidationError, "builder expects a normalized family whose first member is {1/2}");
    identity_nodes_ = {S(-1), S(1)};
    targets_.resize(family_.members.size() * 2);
}

template <class S>
long RisingBuilder<S>::stage() const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    return static_cast<long>(stages_.size());
}

template <class S>
void RisingBuilder<S>::check_deadline() const {
    if (deadline_ && Clock::now() > *deadline_)
        throw Error(ErrorKind::BudgetExceeded, "time budget exhausted while building stage " +
                                                   std::to_string(stages_.size() + 1));
}

template <class S>
S RisingBuilder<S>::grid_value(std::size_t j) {
    while (grid_values_.size() <= j) grid_values_.push_back(from_rational<S>(grid_.at(grid_values_.size())));
    return grid_values_[j];
}

template <class S>
S RisingBuilder<S>::target(int member, long k, std::size_t j) {
    const int branch = (k % 2 == 1) ? 1 : 2;
    auto& table = targets_[static_cast<std::size_t>(member) * 2 + static_cast<std::size_t>(branch - 1)];
    const auto& profile = family_.members[static_cast<std::size_t>(member)].profile;
    while (table.size() <= j)
        table.push_back(from_rational<S>(profile_target(profile, grid_.at(table.size()), branch)));
    return table[j];
}

template <class S>
StageData<S> RisingBuilder<S>::layout_for_stage(long k) const {
    StageData<S> st;
    st.k = k;
    std::vector<Rational> r = grid_.prefix(k);
    st.order.resize(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) st.order[j] = j;
    std::sort(st.order.begin(), st.order.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });

    struct Piece {
        Rational lo, hi;
        int member;
    };
    std::vector<Piece> pieces;
    const long active = std::min<long>(k, static_cast<long>(family_.members.size()));
    for (long n = 1; n < active; ++n) {
        ClosedInterval tr = truncate(family_.members[static_cast<std::size_t>(n)].set, k);
        pieces.push_back(Piece{tr.lo, tr.hi, static_cast<int>(n)});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });

    Rational cur(0);
    for (const auto& p : pieces) {
        if (p.lo > cur) st.bands.push_back(Band<S>{Band<S>::Kind::gap, from_rational<S>(cur), from_rational<S>(p.lo), -1});
        st.bands.push_back(Band<S>{Band<S>::Kind::anchor, from_rational<S>(p.lo), from_rational<S>(p.hi), p.member});
        st.arcs.push_back(AnchorArcs<S>{from_rational<S>(p.lo), p.member, {}});
        if (p.hi != p.lo) st.arcs.push_back(AnchorArcs<S>{from_rational<S>(p.hi), p.member, {}});
        cur = p.hi;
    }
    const Rational half(1, 2);
    if (cur < half) st.bands.push_back(Band<S>{Band<S>::Kind::gap, from_rational<S>(cur), from_rational<S>(half), -1});
    st.arcs.push_back(AnchorArcs<S>{from_rational<S>(half), 0, {}});
    return st;
}

template <class S>
void RisingBuilder<S>::advance_stage() {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    const long k = static_cast<long>(stages_.size()) + 1;
    if (k > max_stage_)
        throw Error(ErrorKind::StageOverflow, "stage " + std::to_string(k) + " exceeds the configured maximum " +
                                                  std::to_string(max_stage_));
    StageData<S> st = layout_for_stage(k);
    const long c = 2 * k + 7;
    for (auto& arc : st.arcs) {
        Cursor cur;
        cur.base = arc.base;
        reset_cursor(cur, k);
        const std::vector<S>& start = stage_start(cur, k);
        arc.rows.assign(static_cast<std::size_t>(2 * k + 2), std::vector<S>(st.order.size()));
        for (std::size_t t = 0; t < st.order.size(); ++t) {
            const std::size_t j = st.order[t];
            const S x0 = start[j];
            const S xi = target(arc.member, k, j);
            for (long i = 0; i <= 2 * k + 1; ++i) arc.rows[static_cast<std::size_t>(i)][t] = ((c - i) * x0 + i * xi) / c;
        }
        for (std::size_t i = 0; i < arc.rows.size(); ++i) {
            if (!rows_ordered(arc.rows[i]))
                throw Error(ErrorKind::InternalOrderViolation,
                            "anchor arcs lost their order at stage " + std::to_string(k));
            if (i > 0)
                for (std::size_t t = 0; t < arc.rows[i].size(); ++t)
                    st.max_step = std::max(st.max_step, std::fabs(as_double(arc.rows[i][t]) - as_double(arc.rows[i - 1][t])));
        }
    }
    stages_.push_back(std::move(st));
}

template <class S>
void RisingBuilder<S>::ensure_stage(long k) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (k > max_stage_)
        throw Error(ErrorKind::CapReached, "stage " + std::to_string(k) + " is beyond the stage cap " +
                                               std::to_string(max_stage_));
    while (static_cast<long>(stages_.size()) < k) {
        check_deadline();
        advance_stage();
    }
}

template <class S>
const StageData<S>& RisingBuilder<S>::stage_data(long k) const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (k < 1 || k > static_cast<long>(stages_.size()))
        throw Error(ErrorKind::RangeError, "stage " + std::to_string(k) + " is not built");
    return stages_[static_cast<std::size_t>(k - 1)];
}

template <class S>
void RisingBuilder<S>::install_stage(StageData<S> data) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    const long k = static_cast<long>(stages_.size()) + 1;
    if (data.k != k) throw Error(ErrorKind::ValidationError, "stages must be installed in order");
    if (k > max_stage_) throw Error(ErrorKind::StageOverflow, "stored stage exceeds the stage cap");
    StageData<S> expect = layout_for_stage(k);
    bool same = expect.order == data.order && expect.bands.size() == data.bands.size() &&
                expect.arcs.size() == data.arcs.size();
    for (std::size_t i = 0; same && i < expect.bands.size(); ++i)
        same = expect.bands[i].kind == data.bands[i].kind && expect.bands[i].lo == data.bands[i].lo &&
               expect.bands[i].hi == data.bands[i].hi && expect.bands[i].member == data.bands[i].member;
    for (std::size_t i = 0; same && i < expect.arcs.size(); ++i) {
        same = expect.arcs[i].base == data.arcs[i].base && expect.arcs[i].member == data.arcs[i].member &&
               data.arcs[i].rows.size() == static_cast<std::size_t>(2 * k + 2);
        for (std::size_t r = 0; same && r < data.arcs[i].rows.size(); ++r)
            same = data.arcs[i].rows[r].size() == expect.order.size() && rows_ordered(data.arcs[i].rows[r]);
    }
    if (!same)
        throw Error(ErrorKind::ValidationError, "stored stage " + std::to_string(k) + " does not match the configuration");
    stages_.push_back(std::move(data));
}

template <class S>
void RisingBuilder<S>::reset_cursor(Cursor& c, long horizon) {
    c.horizon = horizon;
    c.depth = 0;
    c.pushed.resize(static_cast<std::size_t>(horizon + 2));
    for (std::size_t j = 0; j < c.pushed.size(); ++j) c.pushed[j] = grid_value(j);
    c.starts.clear();
    c.starts[1] = std::vector<S>(c.pushed.begin(), c.pushed.begin() + 3);
}

template <class S>
typename RisingBuilder<S>::Cursor& RisingBuilder<S>::cursor_for(const S& base) {
    auto it = cursors_.find(base);
    if (it != cursors_.end()) return it->second;
    if (cursors_.size() >= 512) cursors_.clear();
    Cursor& c = cursors_[base];
    c.base = base;
    reset_cursor(c, std::min(max_stage_, static_cast<long>(stages_.size()) + 4));
    return c;
}

template <class S>
const std::vector<S>& RisingBuilder<S>::stage_start(Cursor& c, long k) {
    auto it = c.starts.find(k);
    if (it != c.starts.end()) return it->second;
    if (k > c.horizon) reset_cursor(c, std::max(k, std::min(max_stage_, 2 * c.horizon)));
    const long target_depth = k * k - 1;
    while (c.depth < target_depth) step_cursor(c);
    return c.starts.at(k);
}

template <class S>
void RisingBuilder<S>::step_cursor(Cursor& c) {
    check_deadline();
    const long m = c.depth + 1;
    const long k = stage_of_strip(m);
    MapRef ref;
    if (c.base == S(0) || c.base == from_int<S>(1, 2)) {
        resolve(Level<S>{Level<S>::Kind::interior, c.base == S(0) ? m : m + 1, S(0)}, ref, &c);
    } else {
        resolve(Level<S>{Level<S>::Kind::interior, m, c.base}, ref, &c);
    }
    const Band<S>* band = nullptr;
    const bool anchored_here = ref.kind == MapRef::Kind::nodes && !ref.own_x.empty();
    (void)band;
    if (anchored_here) {
        // Grid points of R_k follow the recurrence exactly; the rest interpolate.
        const auto& st = stages_[static_cast<std::size_t>(k - 1)];
        std::vector<S> next(c.pushed.size());
        for (std::size_t t = 0; t < st.order.size(); ++t) next[st.order[t]] = ref.own_y[t];
        for (std::size_t j = st.order.size(); j < c.pushed.size(); ++j) next[j] = eval_ref(ref, c.pushed[j]);
        c.pushed.swap(next);
    } else {
        for (auto& x : c.pushed) x = eval_ref(ref, x);
    }
    c.depth = m;
    const long kn = stage_of_strip(m + 1);
    if (kn * kn - 1 == m && kn <= c.horizon)
        c.starts[kn] = std::vector<S>(c.pushed.begin(), c.pushed.begin() + kn + 2);
}

template <class S>
std::size_t RisingBuilder<S>::arc_index(const StageData<S>& st, const S& base) const {
    auto it = std::lower_bound(st.arcs.begin(), st.arcs.end(), base,
                               [](const AnchorArcs<S>& a, const S& b) { return a.base < b; });
    if (it == st.arcs.end() || it->base != base)
        throw Error(ErrorKind::InternalOrderViolation, "missing band boundary arc");
    return static_cast<std::size_t>(it - st.arcs.begin());
}

template <class S>
int RisingBuilder<S>::locate(long k, const S& b, const Band<S>** band) const {
    const auto& bands = stages_[static_cast<std::size_t>(k - 1)].bands;
    auto it = std::upper_bound(bands.begin(), bands.end(), b, [](const S& x, const Band<S>& bd) { return x < bd.lo; });
    --it;
    // Shared endpoints belong to the anchor band.
    if (it->kind == Band<S>::Kind::gap && b == it->lo && it != bands.begin()) --it;
    if (it->kind == Band<S>::Kind::gap && b == it->hi && (it + 1) != bands.end()) ++it;
    *band = &*it;
    return it->kind == Band<S>::Kind::anchor ? it->member : -1;
}

template <class S>
void RisingBuilder<S>::arc_map(const AnchorArcs<S>& arcs, long m, MapRef& out) const {
    const long k = stage_of_strip(m);
    const long i = m - k * k + 1;
    out.kind = MapRef::Kind::nodes;
    out.x0 = &arcs.rows[static_cast<std::size_t>(i - 1)];
    out.y0 = &arcs.rows[static_cast<std::size_t>(i)];
}

template <class S>
void RisingBuilder<S>::top_map(long m, MapRef& out) {
    if (m == 0) {
        out.kind = MapRef::Kind::identity;
        out.x0 = out.y0 = &identity_nodes_;
        return;
    }
    const long k = stage_of_strip(m);
    arc_map(stages_[static_cast<std::size_t>(k - 1)].arcs.back(), m, out);
}

template <class S>
void RisingBuilder<S>::anchor_nodes(long k, long i, int member, const std::vector<S>& start, MapRef& out) {
    const auto& st = stages_[static_cast<std::size_t>(k - 1)];
    const long c = 2 * k + 7;
    out.own_x.resize(st.order.size());
    out.own_y.resize(st.order.size());
    for (std::size_t t = 0; t < st.order.size(); ++t) {
        const std::size_t j = st.order[t];
        const S xi = target(member, k, j);
        out.own_x[t] = ((c - (i - 1)) * start[j] + (i - 1) * xi) / c;
        out.own_y[t] = ((c - i) * start[j] + i * xi) / c;
    }
    out.kind = MapRef::Kind::nodes;
    out.x0 = &out.own_x;
    out.y0 = &out.own_y;
}

template <class S>
void RisingBuilder<S>::resolve(const Level<S>& level, MapRef& out, Cursor* self) {
    const long m = level.strip;
    const S& b = level.base;
    if (b == S(0)) {
        top_map(m - 1, out);
        return;
    }
    const long k = stage_of_strip(m);
    const long i = m - k * k + 1;
    const auto& st = stages_[static_cast<std::size_t>(k - 1)];
    const Band<S>* band = nullptr;
    const int member = locate(k, b, &band);
    if (member >= 0) {
        if (b == band->lo || b == band->hi) {
            arc_map(st.arcs[arc_index(st, b)], m, out);
            return;
        }
        Cursor& c = self ? *self : cursor_for(b);
        const std::vector<S>& start = stage_start(c, k);
        anchor_nodes(k, i, member, start, out);
        return;
    }
    MapRef lo_ref;
    MapRef hi_ref;
    if (band->lo == S(0))
        top_map(m - 1, lo_ref);
    else
        arc_map(st.arcs[arc_index(st, band->lo)], m, lo_ref);
    if (band->hi == from_int<S>(1, 2))
        arc_map(st.arcs.back(), m, hi_ref);
    else
        arc_map(st.arcs[arc_index(st, band->hi)], m, hi_ref);
    out.kind = MapRef::Kind::blend;
    out.x0 = lo_ref.x0;
    out.y0 = lo_ref.y0;
    out.x1 = hi_ref.x0;
    out.y1 = hi_ref.y0;
    out.w1 = (b - band->lo) / (band->hi - band->lo);
    out.w0 = S(1) - out.w1;
}

template <class S>
S RisingBuilder<S>::eval_ref(const MapRef& ref, const S& x) const {
    switch (ref.kind) {
        case MapRef::Kind::identity: return x;
        case MapRef::Kind::nodes:
        case MapRef::Kind::anchor: return pl_eval(ref.x0->data(), ref.y0->data(), ref.x0->size(), x);
        case MapRef::Kind::blend: {
            S a = pl_eval(ref.x0->data(), ref.y0->data(), ref.x0->size(), x);
            S b = pl_eval(ref.x1->data(), ref.y1->data(), ref.x1->size(), x);
            S y = ref.w0 * a + ref.w1 * b;
            return y;
        }
    }
    return x;
}

template <class S>
void RisingBuilder<S>::blend_breakpoints(const MapRef& ref, std::vector<S>& xs, std::vector<S>& ys) const {
    xs.clear();
    std::merge(ref.x0->begin(), ref.x0->end(), ref.x1->begin(), ref.x1->end(), std::back_inserter(xs));
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    ys.resize(xs.size());
    for (std::size_t t = 0; t < xs.size(); ++t) ys[t] = eval_ref(ref, xs[t]);
}

template <class S>
S RisingBuilder<S>::invert_ref(const MapRef& ref, const S& y) const {
    switch (ref.kind) {
        case MapRef::Kind::identity: return y;
        case MapRef::Kind::nodes:
        case MapRef::Kind::anchor: return pl_invert(ref.x0->data(), ref.y0->data(), ref.x0->size(), y);
        case MapRef::Kind::blend: {
            std::vector<S> xs;
            std::vector<S> ys;
            blend_breakpoints(ref, xs, ys);
            return pl_invert(xs.data(), ys.data(), xs.size(), y);
        }
    }
    return y;
}

template <class S>
long RisingBuilder<S>::stage_bound_checked(long k) {
    ensure_stage(k);
    return k;
}

template <class S>
S RisingBuilder<S>::apply(const Level<S>& level, const S& r) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (level.is_edge() || level.strip < 1) throw Error(ErrorKind::DomainError, "builder maps act on strips m >= 1");
    if (r == S(-1) || r == S(1)) return r;
    stage_bound_checked(stage_of_strip(level.base == S(0) ? level.strip - 1 : level.strip));
    MapRef ref;
    resolve(level, ref, nullptr);
    return eval_ref(ref, r);
}

template <class S>
S RisingBuilder<S>::apply_inverse(const Level<S>& level, const S& y) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (level.is_edge() || level.strip < 1) throw Error(ErrorKind::DomainError, "builder maps act on strips m >= 1");
    if (y == S(-1) || y == S(1)) return y;
    stage_bound_checked(stage_of_strip(level.base == S(0) ? level.strip - 1 : level.strip));
    MapRef ref;
    resolve(level, ref, nullptr);
    return invert_ref(ref, y);
}

template <class S>
MonotonePL1D<S> RisingBuilder<S>::level_map(const Level<S>& level) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (level.is_edge() || level.strip < 1) throw Error(ErrorKind::DomainError, "builder maps act on strips m >= 1");
    stage_bound_checked(stage_of_strip(level.base == S(0) ? level.strip - 1 : level.strip));
    MapRef ref;
    resolve(level, ref, nullptr);
    const Strictness strict = is_exact_v<S> ? Strictness::strict : Strictness::non_decreasing;
    std::vector<S> xs;
    std::vector<S> ys;
    if (ref.kind == MapRef::Kind::blend) {
        blend_breakpoints(ref, xs, ys);
    } else {
        xs = *ref.x0;
        ys = *ref.y0;
    }
    // Collapse abscissae that coincide in floating mode.
    std::vector<S> cx;
    std::vector<S> cy;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        if (!cx.empty() && cx.back() == xs[t]) {
            cy.back() = ys[t];
            continue;
        }
        cx.push_back(xs[t]);
        cy.push_back(ys[t]);
    }
    return MonotonePL1D<S>(std::move(cx), std::move(cy), strict);
}

template <class S>
std::size_t RisingBuilder<S>::max_bit_size() const {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    std::size_t best = 0;
    for (const auto& st : stages_)
        for (const auto& arc : st.arcs)
            for (const auto& row : arc.rows)
                for (const auto& x : row) best = std::max(best, bit_size(x));
    return best;
}

template class RisingBuilder<double>;
template class RisingBuilder<Rational>;

}  // namespace rising
