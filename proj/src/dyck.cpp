#include <qtcat/dyck.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtcat {

DyckPath::DyckPath(std::vector<int> area_seq) : area_(std::move(area_seq)) {
    for (size_t i = 0; i < area_.size(); ++i) {
        if (i == 0 && area_[0] != 0)
            throw std::invalid_argument("DyckPath: first area entry must be 0");
        if (area_[i] < 0) throw std::invalid_argument("DyckPath: negative area entry");
        if (i > 0 && area_[i] > area_[i - 1] + 1)
            throw std::invalid_argument("DyckPath: area may rise by at most 1");
    }
}

long DyckPath::area() const { return std::accumulate(area_.begin(), area_.end(), 0L); }

std::vector<int> DyckPath::reading_order() const {
    std::vector<int> rows(area_.size());
    std::iota(rows.begin(), rows.end(), 0);
    std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) {
        if (area_[a] != area_[b]) return area_[a] > area_[b];
        return a > b;
    });
    return rows;
}

std::vector<int> DyckPath::b_sequence() const {
    std::vector<int> order = reading_order();
    std::vector<int> b(order.size(), 0);
    for (size_t i = 0; i < order.size(); ++i) {
        int k = order[i];
        int count = 0;
        for (size_t j = 0; j < i; ++j) {
            int r = order[j];
            // same diagonal, earlier in reading order means larger row index
            if (area_[r] == area_[k])
                ++count;
            else if (area_[r] == area_[k] + 1 && r < k)
                ++count;
        }
        b[i] = count;
    }
    return b;
}

long DyckPath::dinv() const {
    long d = 0;
    for (int b : b_sequence()) d += b;
    return d;
}

bool DyckPath::is_double_rise(int row) const {
    return row + 1 < rows() && area_[row + 1] == area_[row] + 1;
}

Composition DyckPath::touch_composition() const {
    std::vector<int> parts;
    int start = 0;
    for (int i = 1; i <= rows(); ++i) {
        if (i == rows() || area_[i] == 0) {
            parts.push_back(i - start);
            start = i;
        }
    }
    return Composition(std::move(parts));
}

void DyckPath::enumerate(int n, const std::function<void(const DyckPath&)>& fn) {
    if (n < 0) throw std::invalid_argument("DyckPath::enumerate: negative n");
    std::vector<int> acc;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(acc.size()) == n) {
            fn(DyckPath(acc));
            return;
        }
        int hi = acc.empty() ? 0 : acc.back() + 1;
        for (int a = 0; a <= hi; ++a) {
            acc.push_back(a);
            rec();
            acc.pop_back();
        }
    };
    rec();
}

std::vector<DyckPath> DyckPath::all(int n) {
    std::vector<DyckPath> out;
    enumerate(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

DecoratedPath::DecoratedPath(DyckPath path, std::vector<bool> decorated)
    : path_(std::move(path)), decorated_(std::move(decorated)) {
    if (static_cast<int>(decorated_.size()) != path_.rows())
        throw std::invalid_argument("DecoratedPath: decoration size mismatch");
    if (path_.rows() > 0) {
        int first = path_.reading_order()[0];
        if (decorated_[first])
            throw std::invalid_argument(
                "DecoratedPath: first row in reading order cannot be decorated");
    }
}

void DecoratedPath::enumerate(const DyckPath& path,
                              const std::function<void(const DecoratedPath&)>& fn) {
    int n = path.rows();
    if (n == 0) {
        fn(DecoratedPath(path, {}));
        return;
    }
    int excluded = path.reading_order()[0];
    std::vector<int> free_rows;
    for (int i = 0; i < n; ++i)
        if (i != excluded) free_rows.push_back(i);
    for (unsigned long mask = 0; mask < (1ul << free_rows.size()); ++mask) {
        std::vector<bool> dec(n, false);
        for (size_t j = 0; j < free_rows.size(); ++j)
            if (mask & (1ul << j)) dec[free_rows[j]] = true;
        fn(DecoratedPath(path, std::move(dec)));
    }
}

void DecoratedPath::enumerate_all(int n, const std::function<void(const DecoratedPath&)>& fn) {
    DyckPath::enumerate(n, [&](const DyckPath& p) { enumerate(p, fn); });
}

PathStats path_stats(const DecoratedPath& dp) {
    const DyckPath& p = dp.path();
    PathStats st;
    st.area = p.area();
    st.b_seq = p.b_sequence();
    st.dinv = 0;
    for (int b : st.b_seq) st.dinv += b;
    st.area_circ = st.area;
    st.dinv_circ = st.dinv;
    std::vector<int> order = p.reading_order();
    for (size_t i = 0; i < order.size(); ++i) {
        int row = order[i];
        if (!dp.is_decorated(row)) continue;
        if (p.is_double_rise(row)) {
            ++st.rise_circ;
            st.area_circ -= p.area_seq()[row + 1];
        } else {
            ++st.peak_circ;
            st.dinv_circ -= st.b_seq[i];
        }
    }
    return st;
}

Composition rise_touch_composition(const DecoratedPath& dp) {
    const DyckPath& p = dp.path();
    std::vector<int> parts;
    int start = 0;
    for (int i = 1; i <= p.rows(); ++i) {
        if (i == p.rows() || p.area_seq()[i] == 0) {
            int len = i - start;
            for (int r = start; r < i; ++r)
                if (dp.is_decorated(r) && p.is_double_rise(r)) --len;
            parts.push_back(len);
            start = i;
        }
    }
    return Composition(std::move(parts));
}

std::pair<DecoratedPath, RotationInfo> rotate(const DecoratedPath& dp) {
    const DyckPath& p = dp.path();
    int n = p.rows();
    if (n < 1) throw std::invalid_argument("rotate: empty path");
    int f = n;  // last row of the first segment
    for (int i = 1; i < n; ++i)
        if (p.area_seq()[i] == 0) {
            f = i;
            break;
        }
    std::vector<int> area;
    std::vector<bool> dec;
    area.reserve(n - 1);
    dec.reserve(n - 1);
    for (int i = f; i < n; ++i) {
        area.push_back(p.area_seq()[i]);
        dec.push_back(dp.is_decorated(i));
    }
    for (int i = 1; i < f; ++i) {
        area.push_back(p.area_seq()[i] - 1);
        dec.push_back(dp.is_decorated(i));
    }
    RotationInfo info;
    info.moved_rows = f - 1;
    info.removed_decorated = dp.is_decorated(0);
    return {DecoratedPath(DyckPath(std::move(area)), std::move(dec)), info};
}

DecoratedPath unrotate(const DecoratedPath& dp, const RotationInfo& info) {
    const DyckPath& p = dp.path();
    int n1 = p.rows();
    int moved = info.moved_rows;
    if (moved < 0 || moved > n1) throw std::invalid_argument("unrotate: bad moved_rows");
    std::vector<int> area;
    std::vector<bool> dec;
    area.reserve(n1 + 1);
    dec.reserve(n1 + 1);
    area.push_back(0);
    dec.push_back(info.removed_decorated);
    for (int i = n1 - moved; i < n1; ++i) {
        area.push_back(p.area_seq()[i] + 1);
        dec.push_back(dp.is_decorated(i));
    }
    for (int i = 0; i < n1 - moved; ++i) {
        area.push_back(p.area_seq()[i]);
        dec.push_back(dp.is_decorated(i));
    }
    return DecoratedPath(DyckPath(std::move(area)), std::move(dec));
}

// -------------------------------- MultiPoly ---------------------------------

MultiPoly MultiPoly::one() {
    MultiPoly p;
    p.terms_[{0, 0, 0, 0}] = 1;
    return p;
}

void MultiPoly::add_term(const Exps& e, const mpz_class& c) {
    if (c == 0) return;
    for (int x : e)
        if (x < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    auto it = terms_.find(e);
    if (it == terms_.end())
        terms_.emplace(e, c);
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r += b;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::shifted(const Exps& e, const mpz_class& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [e0, c0] : terms_) {
        Exps e1 = {e0[0] + e[0], e0[1] + e[1], e0[2] + e[2], e0[3] + e[3]};
        r.add_term(e1, c0 * c);
    }
    return r;
}

BigRat MultiPoly::eval(const BigRat& q, const BigRat& t, const BigRat& z,
                       const BigRat& w) const {
    BigRat s;
    for (const auto& [e, c] : terms_)
        s += BigRat(c) * q.pow(e[0]) * t.pow(e[1]) * z.pow(e[2]) * w.pow(e[3]);
    return s;
}

LaurentQT MultiPoly::to_laurent_qt() const {
    std::vector<LaurentQT::Term> terms;
    for (const auto& [e, c] : terms_) {
        if (e[2] != 0 || e[3] != 0)
            throw std::invalid_argument("MultiPoly: z/w present in q,t restriction");
        terms.push_back({{e[0], e[1]}, BigRat(c)});
    }
    return LaurentQT::from_terms(std::move(terms));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[4] = {"q", "t", "z", "w"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_var = e[0] || e[1] || e[2] || e[3];
        if (a != 1 || !has_var) {
            os << a.get_str();
            if (has_var) os << "*";
        }
        bool started = false;
        for (int v = 0; v < 4; ++v) {
            if (!e[v]) continue;
            if (started) os << "*";
            os << names[v];
            if (e[v] != 1) os << "^" << e[v];
            started = true;
        }
    }
    return os.str();
}

std::string MultiPoly::to_json() const {
    std::ostringstream os;
    os << "{\"vars\":[\"q\",\"t\",\"z\",\"w\"],\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ",";
        first = false;
        os << "[[" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "],\""
           << c.get_str() << "\"]";
    }
    os << "]}";
    return os.str();
}

// ----------------------------- Catalan polynomials ---------------------------

MultiPoly cat_rise(const Composition& alpha, int k, int ell) {
    MultiPoly out;
    if (k < 0 || ell < 0) return out;
    int n = alpha.size() + ell;
    if (n == 0) return (k == 0 && alpha.empty()) ? MultiPoly::one() : out;
    DecoratedPath::enumerate_all(n, [&](const DecoratedPath& dp) {
        PathStats st = path_stats(dp);
        if (st.peak_circ != k || st.rise_circ != ell) return;
        if (rise_touch_composition(dp) != alpha) return;
        out.add_term({static_cast<int>(st.dinv_circ), static_cast<int>(st.area_circ), 0, 0}, 1);
    });
    return out;
}

MultiPoly cat_poly(int n, CatMethod method) {
    MultiPoly out;
    if (n == 0) return MultiPoly::one();
    if (method == CatMethod::DecoratedSum) {
        DecoratedPath::enumerate_all(n, [&](const DecoratedPath& dp) {
            PathStats st = path_stats(dp);
            out.add_term({static_cast<int>(st.dinv_circ), static_cast<int>(st.area_circ),
                          st.peak_circ, st.rise_circ},
                         1);
        });
        return out;
    }
    DyckPath::enumerate(n, [&](const DyckPath& p) {
        std::vector<int> b = p.b_sequence();
        MultiPoly acc;
        acc.add_term({static_cast<int>(p.dinv()), static_cast<int>(p.area()), 0, 0}, 1);
        for (size_t i = 1; i < b.size(); ++i)
            if (b[i] > b[i - 1]) acc += acc.shifted({-b[i], 0, 1, 0}, 1);
        const std::vector<int>& a = p.area_seq();
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i] > a[i - 1]) acc += acc.shifted({0, -a[i], 0, 1}, 1);
        out += acc;
    });
    return out;
}

}  // namespace qtcat
