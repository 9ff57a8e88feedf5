#include "groupalg/ring.hpp"

#include <algorithm>
#include <sstream>

namespace groupalg {

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::no || b == Tri::no) return Tri::no;
    if (a == Tri::yes && b == Tri::yes) return Tri::yes;
    return Tri::unknown;
}

const char* to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

bool tri_le(Tri a, Tri b) {
    auto rank = [](Tri t) { return t == Tri::no ? 0 : t == Tri::unknown ? 1 : 2; };
    return rank(a) <= rank(b);
}

Tri tri_min(Tri a, Tri b) {
    return tri_le(a, b) ? a : b;
}

// ---------------------------------------------------------------------------
// Group

Group Group::infinite_cyclic() {
    return Group{};
}

Group Group::trivial() {
    return from_table({{0}});
}

Group Group::cyclic(int order) {
    if (order < 1) throw domain_error("cyclic group order must be >= 1");
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) t[i][j] = (i + j) % order;
    return from_table(std::move(t));
}

Group Group::from_table(std::vector<std::vector<int>> table) {
    const int k = static_cast<int>(table.size());
    if (k == 0) throw domain_error("group table must be non-empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != k)
            throw domain_error("group table must be square");
        for (int v : row)
            if (v < 0 || v >= k) throw domain_error("group table entry out of range");
    }
    // id 0 is the identity
    for (int i = 0; i < k; ++i) {
        if (table[0][i] != i || table[i][0] != i)
            throw domain_error("group table: element 0 is not an identity");
    }
    // inverses
    for (int i = 0; i < k; ++i) {
        bool found = false;
        for (int j = 0; j < k && !found; ++j)
            found = table[i][j] == 0 && table[j][i] == 0;
        if (!found) throw domain_error("group table: element has no inverse");
    }
    // associativity
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw domain_error("group table is not associative");
    Group g;
    g.table_ = std::make_shared<const std::vector<std::vector<int>>>(std::move(table));
    return g;
}

bool Group::is_trivial() const {
    return table_ && table_->size() == 1;
}

int Group::order() const {
    if (!table_) throw domain_error("infinite cyclic group has no finite order");
    return static_cast<int>(table_->size());
}

int Group::multiply(int a, int b) const {
    if (!table_) return a + b; // exponents
    const int k = order();
    if (a < 0 || a >= k || b < 0 || b >= k)
        throw domain_error("group element id out of range");
    return (*table_)[a][b];
}

int Group::inverse_of(int a) const {
    if (!table_) return -a;
    const int k = order();
    if (a < 0 || a >= k) throw domain_error("group element id out of range");
    for (int j = 0; j < k; ++j)
        if ((*table_)[a][j] == 0) return j;
    throw domain_error("group element has no inverse"); // unreachable for valid tables
}

bool Group::abelian() const {
    if (!table_) return true;
    const int k = order();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if ((*table_)[a][b] != (*table_)[b][a]) return false;
    return true;
}

std::optional<int> Group::cyclic_order() const {
    if (!table_) return std::nullopt;
    const int k = order();
    for (int g = 0; g < k; ++g) {
        int x = 0, steps = 0;
        do {
            x = multiply(x, g);
            ++steps;
        } while (x != 0 && steps <= k);
        if (steps == k) return k;
    }
    return std::nullopt;
}

bool Group::same(const Group& other) const {
    if (is_finite() != other.is_finite()) return false;
    if (!is_finite()) return true;
    return *table_ == *other.table_;
}

std::string Group::spec_string() const {
    if (!is_finite()) return "Zinf";
    if (auto k = cyclic_order()) return "C" + std::to_string(*k);
    return "Finite" + std::to_string(order());
}

// ---------------------------------------------------------------------------
// RingElem

const mpz_class& RingElem::int_value() const {
    if (!holds_int()) throw domain_error("ring element is not integer-shaped");
    return std::get<mpz_class>(v_);
}

const mpq_class& RingElem::rat_value() const {
    if (!holds_rat()) throw domain_error("ring element is not rational-shaped");
    return std::get<mpq_class>(v_);
}

const RingElem::Terms& RingElem::terms() const {
    if (!holds_terms()) throw domain_error("ring element is not finitely-supported-map-shaped");
    return std::get<Terms>(v_);
}

bool RingElem::operator==(const RingElem& other) const {
    if (v_.index() != other.v_.index()) return false;
    if (holds_int()) return cmp(int_value(), other.int_value()) == 0;
    if (holds_rat()) return cmp(rat_value(), other.rat_value()) == 0;
    return terms() == other.terms();
}

bool RingElem::operator<(const RingElem& other) const {
    if (v_.index() != other.v_.index()) return v_.index() < other.v_.index();
    if (holds_int()) return cmp(int_value(), other.int_value()) < 0;
    if (holds_rat()) return cmp(rat_value(), other.rat_value()) < 0;
    const Terms& a = terms();
    const Terms& b = other.terms();
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (!(a[i].second == b[i].second)) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Ring

Ring Ring::integers() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::integers;
    n->commutative = true;
    return Ring(std::move(n));
}

Ring Ring::rationals() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::rationals;
    n->commutative = true;
    return Ring(std::move(n));
}

Ring Ring::integers_mod(unsigned long m) {
    if (m < 2) throw domain_error("Zmod modulus must be >= 2");
    auto n = std::make_shared<Node>();
    n->kind = Kind::integers_mod;
    n->commutative = true;
    n->n = m;
    return Ring(std::move(n));
}

Ring Ring::laurent(Ring base) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::laurent;
    n->commutative = base.commutative();
    n->base = base.node_;
    return Ring(std::move(n));
}

Ring Ring::group_ring(Ring base, Group g) {
    if (!g.is_finite()) return laurent(std::move(base));
    if (g.is_trivial()) return base;
    auto n = std::make_shared<Node>();
    n->kind = Kind::group_ring;
    n->commutative = base.commutative() && g.abelian();
    n->base = base.node_;
    n->grp = std::move(g);
    return Ring(std::move(n));
}

unsigned long Ring::modulus() const {
    if (kind() != Kind::integers_mod) throw domain_error("ring has no modulus");
    return node_->n;
}

Ring Ring::base() const {
    if (!node_->base) throw domain_error("ring has no base ring");
    return Ring(node_->base);
}

const Group& Ring::group() const {
    if (!node_->grp) throw domain_error("ring is not a group ring");
    return *node_->grp;
}

bool Ring::same(const Ring& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::integers:
        case Kind::rationals: return true;
        case Kind::integers_mod: return modulus() == other.modulus();
        case Kind::laurent: return base().same(other.base());
        case Kind::group_ring:
            return group().same(other.group()) && base().same(other.base());
    }
    return false;
}

RingElem Ring::zero() const {
    switch (kind()) {
        case Kind::integers:
        case Kind::integers_mod: return RingElem(mpz_class(0));
        case Kind::rationals: return RingElem(mpq_class(0));
        default: return RingElem(RingElem::Terms{});
    }
}

RingElem Ring::one() const {
    return from_int(1);
}

RingElem Ring::from_int(long v) const {
    switch (kind()) {
        case Kind::integers: return RingElem(mpz_class(v));
        case Kind::rationals: return RingElem(mpq_class(v));
        case Kind::integers_mod: {
            mpz_class r = mpz_class(v) % mpz_class(node_->n);
            if (r < 0) r += static_cast<long>(node_->n);
            return RingElem(std::move(r));
        }
        default: {
            if (v == 0) return zero();
            return monomial(0, base().from_int(v));
        }
    }
}

RingElem Ring::monomial(long key, const RingElem& coeff) const {
    if (kind() != Kind::laurent && kind() != Kind::group_ring)
        throw domain_error("monomials exist only in laurent/group rings");
    base().check_elem(coeff);
    if (kind() == Kind::group_ring) {
        if (key < 0 || key >= group().order())
            throw domain_error("group element id out of range for group-ring monomial");
    }
    if (base().is_zero(coeff)) return zero();
    RingElem::Terms t;
    t.emplace_back(key, coeff);
    return RingElem(std::move(t));
}

bool Ring::is_zero(const RingElem& a) const {
    check_elem(a);
    switch (kind()) {
        case Kind::integers:
        case Kind::integers_mod: return a.int_value() == 0;
        case Kind::rationals: return a.rat_value() == 0;
        default: return a.terms().empty();
    }
}

bool Ring::eq(const RingElem& a, const RingElem& b) const {
    check_elem(a);
    check_elem(b);
    return a == b;
}

namespace {

// merge two canonical term lists with a coefficient combiner
RingElem::Terms merge_terms(const Ring& base, const RingElem::Terms& a,
                            const RingElem::Terms& b, bool negate_b) {
    RingElem::Terms out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first,
                             negate_b ? base.neg(b[j].second) : b[j].second);
            ++j;
        } else {
            RingElem c = negate_b ? base.sub(a[i].second, b[j].second)
                                  : base.add(a[i].second, b[j].second);
            if (!base.is_zero(c)) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

void accumulate_term(const Ring& base, std::vector<std::pair<long, RingElem>>& acc,
                     long key, const RingElem& val) {
    auto it = std::lower_bound(acc.begin(), acc.end(), key,
                               [](const auto& p, long k) { return p.first < k; });
    if (it != acc.end() && it->first == key) {
        it->second = base.add(it->second, val);
    } else {
        acc.insert(it, {key, val});
    }
}

} // namespace

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
    check_elem(a);
    check_elem(b);
    switch (kind()) {
        case Kind::integers: return RingElem(mpz_class(a.int_value() + b.int_value()));
        case Kind::rationals: {
            mpq_class r = a.rat_value() + b.rat_value();
            r.canonicalize();
            return RingElem(std::move(r));
        }
        case Kind::integers_mod: {
            mpz_class r = (a.int_value() + b.int_value()) % mpz_class(node_->n);
            return RingElem(std::move(r));
        }
        default:
            return RingElem(merge_terms(base(), a.terms(), b.terms(), false));
    }
}

RingElem Ring::neg(const RingElem& a) const {
    check_elem(a);
    switch (kind()) {
        case Kind::integers: return RingElem(mpz_class(-a.int_value()));
        case Kind::rationals: return RingElem(mpq_class(-a.rat_value()));
        case Kind::integers_mod: {
            mpz_class r = (-a.int_value()) % mpz_class(node_->n);
            if (r < 0) r += mpz_class(node_->n);
            return RingElem(std::move(r));
        }
        default: {
            RingElem::Terms t = a.terms();
            const Ring b = base();
            for (auto& [k, c] : t) c = b.neg(c);
            return RingElem(std::move(t));
        }
    }
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
    if (kind() == Kind::laurent || kind() == Kind::group_ring) {
        check_elem(a);
        check_elem(b);
        return RingElem(merge_terms(base(), a.terms(), b.terms(), true));
    }
    return add(a, neg(b));
}

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
    check_elem(a);
    check_elem(b);
    switch (kind()) {
        case Kind::integers: return RingElem(mpz_class(a.int_value() * b.int_value()));
        case Kind::rationals: {
            mpq_class r = a.rat_value() * b.rat_value();
            r.canonicalize();
            return RingElem(std::move(r));
        }
        case Kind::integers_mod: {
            mpz_class r = (a.int_value() * b.int_value()) % mpz_class(node_->n);
            return RingElem(std::move(r));
        }
        case Kind::laurent: {
            const Ring bs = base();
            RingElem::Terms acc;
            for (const auto& [ka, ca] : a.terms())
                for (const auto& [kb, cb] : b.terms())
                    accumulate_term(bs, acc, ka + kb, bs.mul(ca, cb));
            std::erase_if(acc, [&](const auto& p) { return bs.is_zero(p.second); });
            return RingElem(std::move(acc));
        }
        case Kind::group_ring: {
            const Ring bs = base();
            const Group& g = group();
            RingElem::Terms acc;
            for (const auto& [ka, ca] : a.terms())
                for (const auto& [kb, cb] : b.terms())
                    accumulate_term(bs, acc, g.multiply(static_cast<int>(ka), static_cast<int>(kb)),
                                    bs.mul(ca, cb));
            std::erase_if(acc, [&](const auto& p) { return bs.is_zero(p.second); });
            return RingElem(std::move(acc));
        }
    }
    throw domain_error("unreachable ring kind");
}

RingElem Ring::canonical(const RingElem& a) const {
    switch (kind()) {
        case Kind::integers: return RingElem(mpz_class(a.int_value()));
        case Kind::rationals: {
            mpq_class r = a.rat_value();
            r.canonicalize();
            return RingElem(std::move(r));
        }
        case Kind::integers_mod: {
            mpz_class r = a.int_value() % mpz_class(node_->n);
            if (r < 0) r += mpz_class(node_->n);
            return RingElem(std::move(r));
        }
        default: {
            const Ring bs = base();
            RingElem::Terms out;
            for (const auto& [k, c] : a.terms()) {
                RingElem cc = bs.canonical(c);
                if (!bs.is_zero(cc)) accumulate_term(bs, out, k, cc);
            }
            std::erase_if(out, [&](const auto& p) { return bs.is_zero(p.second); });
            return RingElem(std::move(out));
        }
    }
}

RingElem Ring::star(const RingElem& a) const {
    check_elem(a);
    switch (kind()) {
        case Kind::integers:
        case Kind::rationals:
        case Kind::integers_mod: return a;
        case Kind::laurent: {
            const Ring bs = base();
            RingElem::Terms out;
            for (const auto& [k, c] : a.terms()) out.emplace_back(-k, bs.star(c));
            std::sort(out.begin(), out.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            return RingElem(std::move(out));
        }
        case Kind::group_ring: {
            const Ring bs = base();
            const Group& g = group();
            RingElem::Terms out;
            for (const auto& [k, c] : a.terms())
                out.emplace_back(g.inverse_of(static_cast<int>(k)), bs.star(c));
            std::sort(out.begin(), out.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            return RingElem(std::move(out));
        }
    }
    throw domain_error("unreachable ring kind");
}

void Ring::check_elem(const RingElem& a) const {
    switch (kind()) {
        case Kind::integers:
            if (!a.holds_int()) throw domain_error("element does not belong to Z");
            return;
        case Kind::rationals:
            if (!a.holds_rat()) throw domain_error("element does not belong to Q");
            return;
        case Kind::integers_mod: {
            if (!a.holds_int())
                throw domain_error("element does not belong to Zmod:" + std::to_string(node_->n));
            const mpz_class& v = a.int_value();
            if (v < 0 || v >= mpz_class(node_->n))
                throw domain_error("residue out of range for Zmod:" + std::to_string(node_->n));
            return;
        }
        case Kind::laurent:
        case Kind::group_ring: {
            if (!a.holds_terms())
                throw domain_error("element does not belong to " + spec_string());
            const Ring bs = base();
            long prev = 0;
            bool first = true;
            for (const auto& [k, c] : a.terms()) {
                if (!first && k <= prev)
                    throw domain_error("term keys not strictly increasing");
                prev = k;
                first = false;
                if (kind() == Kind::group_ring && (k < 0 || k >= group().order()))
                    throw domain_error("group-ring key out of range");
                bs.check_elem(c);
                if (bs.is_zero(c)) throw domain_error("stored zero coefficient");
            }
            return;
        }
    }
}

ChainFlags Ring::chain_flags() const {
    switch (kind()) {
        case Kind::integers: return {Tri::yes, Tri::no};
        case Kind::rationals: return {Tri::yes, Tri::yes};
        case Kind::integers_mod: return {Tri::yes, Tri::yes};
        case Kind::laurent:
            return group_ring_flags(base().chain_flags(), Group::infinite_cyclic());
        case Kind::group_ring:
            return group_ring_flags(base().chain_flags(), group());
    }
    return {};
}

bool Ring::finite() const {
    switch (kind()) {
        case Kind::integers_mod: return true;
        case Kind::group_ring: return group().is_finite() && base().finite();
        default: return false;
    }
}

unsigned long Ring::cardinality() const {
    if (!finite()) throw domain_error("ring is not finite");
    if (kind() == Kind::integers_mod) return node_->n;
    unsigned long b = base().cardinality();
    unsigned long card = 1;
    for (int i = 0; i < group().order(); ++i) {
        if (card > (1ul << 24) / b) throw domain_error("finite ring too large to enumerate");
        card *= b;
    }
    return card;
}

std::vector<RingElem> Ring::enumerate() const {
    if (!finite()) throw domain_error("cannot enumerate an infinite ring");
    if (kind() == Kind::integers_mod) {
        std::vector<RingElem> out;
        out.reserve(node_->n);
        for (unsigned long i = 0; i < node_->n; ++i)
            out.push_back(RingElem(mpz_class(static_cast<long>(i))));
        return out;
    }
    // group ring: all coefficient tuples over the group elements
    const Ring bs = base();
    const std::vector<RingElem> belems = bs.enumerate();
    const int k = group().order();
    std::vector<RingElem> out;
    std::vector<size_t> idx(static_cast<size_t>(k), 0);
    while (true) {
        RingElem::Terms t;
        for (int gi = 0; gi < k; ++gi) {
            const RingElem& c = belems[idx[static_cast<size_t>(gi)]];
            if (!bs.is_zero(c)) t.emplace_back(gi, c);
        }
        out.push_back(RingElem(std::move(t)));
        int pos = k - 1;
        while (pos >= 0) {
            if (++idx[static_cast<size_t>(pos)] < belems.size()) break;
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::string Ring::elem_string(const RingElem& a) const {
    check_elem(a);
    switch (kind()) {
        case Kind::integers:
        case Kind::integers_mod: return a.int_value().get_str();
        case Kind::rationals: return a.rat_value().get_str();
        case Kind::laurent: {
            if (a.terms().empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (const auto& [k, c] : a.terms()) {
                if (!first) os << " + ";
                first = false;
                os << "(" << base().elem_string(c) << ")";
                if (k != 0) os << "*x^" << k;
            }
            return os.str();
        }
        case Kind::group_ring: {
            if (a.terms().empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (const auto& [k, c] : a.terms()) {
                if (!first) os << " + ";
                first = false;
                os << "(" << base().elem_string(c) << ")*g" << k;
            }
            return os.str();
        }
    }
    return {};
}

namespace {

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(':', start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

Ring parse_tokens(const std::vector<std::string>& toks, size_t& i) {
    if (i >= toks.size()) throw parse_error("truncated ring spec");
    const std::string& t = toks[i++];
    if (t == "Z") return Ring::integers();
    if (t == "Q") return Ring::rationals();
    if (t == "Zmod") {
        if (i >= toks.size()) throw parse_error("Zmod requires a modulus, e.g. Zmod:4");
        const std::string& m = toks[i++];
        if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("invalid Zmod modulus '" + m + "'");
        unsigned long n = 0;
        try {
            n = std::stoul(m);
        } catch (const std::out_of_range&) {
            throw parse_error("Zmod modulus '" + m + "' is out of range");
        }
        if (n < 2) throw parse_error("Zmod modulus must be >= 2");
        return Ring::integers_mod(n);
    }
    if (t == "Laurent") return Ring::laurent(parse_tokens(toks, i));
    if (t == "GroupRing") {
        Ring base = parse_tokens(toks, i);
        if (i >= toks.size()) throw parse_error("GroupRing requires a group, e.g. GroupRing:Q:C3");
        const std::string& g = toks[i++];
        if (g.size() < 2 || g[0] != 'C' ||
            g.find_first_not_of("0123456789", 1) != std::string::npos)
            throw parse_error("unsupported group spec '" + g + "' (expected C<k>)");
        int k = 0;
        try {
            k = std::stoi(g.substr(1));
        } catch (const std::out_of_range&) {
            throw parse_error("cyclic group order '" + g + "' is out of range");
        }
        if (k < 1) throw parse_error("cyclic group order must be >= 1");
        if (k > 64) throw parse_error("cyclic group order must be <= 64");
        return Ring::group_ring(std::move(base), Group::cyclic(k));
    }
    throw parse_error("unknown ring spec token '" + t + "'");
}

} // namespace

Ring Ring::parse_spec(const std::string& spec) {
    const auto toks = split_colon(spec);
    size_t i = 0;
    Ring r = parse_tokens(toks, i);
    if (i != toks.size()) throw parse_error("trailing tokens in ring spec '" + spec + "'");
    return r;
}

std::string Ring::spec_string() const {
    switch (kind()) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::integers_mod: return "Zmod:" + std::to_string(node_->n);
        case Kind::laurent: return "Laurent:" + base().spec_string();
        case Kind::group_ring:
            return "GroupRing:" + base().spec_string() + ":" + group().spec_string();
    }
    return {};
}

ChainFlags group_ring_flags(const ChainFlags& base, const Group& g) {
    ChainFlags out;
    out.noetherian = base.noetherian;
    out.artinian = g.is_finite() ? base.artinian : Tri::no;
    return out;
}

} // namespace groupalg
