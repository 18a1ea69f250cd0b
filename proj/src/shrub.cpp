#include "twocolor/shrub.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twocolor/dg.hpp"

namespace twocolor {

bool operator==(const Shrub& a, const Shrub& b) {
    return a.color == b.color && a.slots.size() == b.slots.size() &&
           std::equal(a.slots.begin(), a.slots.end(), b.slots.begin(),
                      [](const Shrubbery& x, const Shrubbery& y) { return x == y; });
}

bool operator==(const Shrubbery& a, const Shrubbery& b) {
    return a.shrubs.size() == b.shrubs.size() &&
           std::equal(a.shrubs.begin(), a.shrubs.end(), b.shrubs.begin(),
                      [](const Shrub& x, const Shrub& y) { return x == y; });
}

bool StructuralLess::operator()(const Shrub& a, const Shrub& b) const {
    if (a.color != b.color) return a.color < b.color;
    return std::lexicographical_compare(a.slots.begin(), a.slots.end(), b.slots.begin(), b.slots.end(),
                                        [this](const Shrubbery& x, const Shrubbery& y) { return (*this)(x, y); });
}

bool StructuralLess::operator()(const Shrubbery& a, const Shrubbery& b) const {
    return std::lexicographical_compare(a.shrubs.begin(), a.shrubs.end(), b.shrubs.begin(), b.shrubs.end(),
                                        [this](const Shrub& x, const Shrub& y) { return (*this)(x, y); });
}

int length(const Shrub& s) {
    if (s.is_dot()) return 1;
    int l = static_cast<int>(s.slots.size()) + 1;
    for (const auto& sl : s.slots) l += length(sl);
    return l;
}

int length(const Shrubbery& l) {
    int t = 0;
    for (const auto& s : l.shrubs) t += length(s);
    return t;
}

std::string word(const Shrub& s) {
    if (s.is_dot()) return std::string(1, letter(s.color));
    std::string w(1, letter(s.color));
    for (const auto& sl : s.slots) {
        w += word(sl);
        w += letter(s.color);
    }
    return w;
}

std::string word(const Shrubbery& l) {
    std::string w;
    for (const auto& s : l.shrubs) w += word(s);
    return w;
}

namespace {

void serialize_shrub(const Shrub& s, std::ostringstream& out) {
    char c = s.color == SColor::red ? 'r' : 'b';
    if (s.is_dot()) {
        out << c;
        return;
    }
    out << static_cast<char>(std::toupper(c)) << "(";
    for (size_t i = 0; i < s.slots.size(); ++i) {
        if (i) out << "|";
        for (const auto& inner : s.slots[i].shrubs) serialize_shrub(inner, out);
    }
    out << ")";
}

} // namespace

std::string serialize(const Shrubbery& l) {
    std::ostringstream out;
    for (const auto& s : l.shrubs) serialize_shrub(s, out);
    return out.str();
}

namespace {

struct ShrubParser {
    std::string_view s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return i < s.size() ? s[i] : '\0'; }

    Shrubbery shrubbery(std::optional<SColor> required) {
        Shrubbery l;
        for (;;) {
            char c = peek();
            SColor col;
            if (c == 'r' || c == 'R') col = SColor::red;
            else if (c == 'b' || c == 'B') col = SColor::blue;
            else break;
            if (required && col != *required) break;
            l.shrubs.push_back(shrub());
        }
        return l;
    }

    Shrub shrub() {
        char c = peek();
        ++i;
        SColor col = (c == 'r' || c == 'R') ? SColor::red : SColor::blue;
        Shrub sh{col, {}};
        if (c == 'r' || c == 'b') return sh;  // dot
        if (peek() != '(') throw parse_error("expected '(' in shrubbery text");
        ++i;
        for (;;) {
            sh.slots.push_back(shrubbery(other(col)));
            char d = peek();
            if (d == '|') {
                ++i;
                continue;
            }
            if (d == ')') {
                ++i;
                break;
            }
            throw parse_error("expected '|' or ')' in shrubbery text");
        }
        return sh;
    }
};

} // namespace

Shrubbery parse_shrubbery(std::string_view text) {
    ShrubParser p{text};
    Shrubbery l = p.shrubbery(std::nullopt);
    if (!p.done()) throw parse_error("trailing characters in shrubbery text: " + std::string(text));
    return l;
}

namespace {

void decorate(const Shrub& s, std::string& w, std::vector<std::string>& dec) {
    char c = letter(s.color);
    if (s.is_dot()) {
        w += c;
        dec.push_back("U0");
        return;
    }
    w += c;
    dec.push_back("U1");
    for (size_t i = 0; i < s.slots.size(); ++i) {
        for (const auto& inner : s.slots[i].shrubs) decorate(inner, w, dec);
        w += c;
        dec.push_back(i + 1 < s.slots.size() ? "D0" : "D1");
    }
}

} // namespace

std::pair<std::string, std::vector<std::string>> to_word_and_sequence(const Shrubbery& l) {
    std::string w;
    std::vector<std::string> dec;
    for (const auto& s : l.shrubs) decorate(s, w, dec);
    return {w, dec};
}

int stem_count(const Shrubbery& l) {
    auto [w, dec] = to_word_and_sequence(l);
    return static_cast<int>(std::count(dec.begin(), dec.end(), "D0"));
}

namespace {

bool alternating(std::string_view w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return false;
    return true;
}

} // namespace

Predicates predicates(const Shrubbery& l) {
    Predicates p;
    p.complete = std::all_of(l.shrubs.begin(), l.shrubs.end(),
                             [](const Shrub& s) { return alternating(word(s)); });
    p.stem_count = stem_count(l);
    p.well_tended = p.complete && p.stem_count == 0;
    return p;
}

// ---- enumeration ----

namespace {

struct EnumKey {
    int len;
    int color;  // 0 red, 1 blue, 2 any (shrubberies only)
    bool basis;
    friend auto operator<=>(const EnumKey&, const EnumKey&) = default;
};

std::vector<Shrubbery> shrubberies_exact(int len, std::optional<SColor> color, bool basis);

// all shrubs of the exact length and color
const std::vector<Shrub>& shrubs_exact(int len, SColor color, bool basis) {
    static std::map<EnumKey, std::vector<Shrub>> memo;
    EnumKey key{len, color == SColor::red ? 0 : 1, basis};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Shrub> out;
    if (len == 1) {
        out.push_back({color, {}});
    } else if (len >= 2) {
        for (int k = 1; k <= len - 1; ++k) {
            int rem = len - k - 1;  // total length of the k slots
            // ordered compositions of rem into k parts (>= 1 when basis)
            std::vector<int> parts(k, 0);
            auto rec = [&](auto&& self, int idx, int left) -> void {
                if (idx == k) {
                    if (left != 0) return;
                    std::vector<std::vector<Shrubbery>> choices(k);
                    for (int j = 0; j < k; ++j)
                        choices[j] = shrubberies_exact(parts[j], other(color), basis);
                    std::vector<size_t> pick(k, 0);
                    for (;;) {
                        Shrub sh{color, {}};
                        for (int j = 0; j < k; ++j) sh.slots.push_back(choices[j][pick[j]]);
                        out.push_back(std::move(sh));
                        int j = k - 1;
                        while (j >= 0 && ++pick[j] == choices[j].size()) pick[j--] = 0;
                        if (j < 0) break;
                    }
                    return;
                }
                for (int v = basis ? 1 : 0; v <= left; ++v) {
                    parts[idx] = v;
                    self(self, idx + 1, left - v);
                }
            };
            if (!(basis && rem < k)) rec(rec, 0, rem);
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

std::vector<Shrubbery> shrubberies_exact(int len, std::optional<SColor> color, bool basis) {
    std::vector<Shrubbery> out;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= len; ++first) {
        std::vector<const Shrub*> heads;
        for (SColor c : {SColor::red, SColor::blue}) {
            if (color && c != *color) continue;
            for (const auto& s : shrubs_exact(first, c, basis)) heads.push_back(&s);
        }
        auto tails = shrubberies_exact(len - first, color, basis);
        for (const Shrub* h : heads)
            for (const auto& t : tails) {
                Shrubbery l;
                l.shrubs.push_back(*h);
                l.shrubs.insert(l.shrubs.end(), t.shrubs.begin(), t.shrubs.end());
                out.push_back(std::move(l));
            }
    }
    return out;
}

} // namespace

std::vector<Shrubbery> enumerate_exact(int len, bool blue_only, bool basis_only) {
    if (len < 0) throw arg_error("enumerate_exact: negative length");
    return shrubberies_exact(len, blue_only ? std::optional<SColor>(SColor::blue) : std::nullopt,
                             basis_only);
}

std::vector<Shrubbery> enumerate_subword_shrubs(std::string_view w, bool blue_only, bool basis_only) {
    std::vector<Shrubbery> out;
    for (int len = 0; len <= static_cast<int>(w.size()); ++len)
        for (auto& l : enumerate_exact(len, blue_only, basis_only))
            if (is_subword(word(l), w)) out.push_back(std::move(l));
    return out;
}

namespace {

// complete shrubs: arch slots hold a single complete shrub of the other color
std::vector<Shrub> complete_shrubs(int len, SColor color) {
    std::vector<Shrub> out;
    if (len == 1) {
        out.push_back({color, {}});
        return out;
    }
    if (len < 3 || len % 2 == 0) return out;
    for (int k = 1; 2 * k + 1 <= len; ++k) {
        int rem = len - k - 1;  // split into k odd slot lengths
        std::vector<int> parts(k, 0);
        auto rec = [&](auto&& self, int idx, int left) -> void {
            if (idx == k) {
                if (left != 0) return;
                std::vector<std::vector<Shrub>> choices(k);
                for (int j = 0; j < k; ++j) choices[j] = complete_shrubs(parts[j], other(color));
                std::vector<size_t> pick(k, 0);
                for (;;) {
                    Shrub sh{color, {}};
                    for (int j = 0; j < k; ++j) sh.slots.push_back(Shrubbery{{choices[j][pick[j]]}});
                    out.push_back(std::move(sh));
                    int j = k - 1;
                    while (j >= 0 && ++pick[j] == choices[j].size()) pick[j--] = 0;
                    if (j < 0) break;
                }
                return;
            }
            for (int v = 1; v <= left; v += 2) {
                parts[idx] = v;
                self(self, idx + 1, left - v);
            }
        };
        rec(rec, 0, rem);
    }
    return out;
}

} // namespace

std::vector<Shrubbery> enumerate_complete(int len) {
    std::vector<Shrubbery> out;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= len; ++first) {
        std::vector<Shrub> heads;
        for (SColor c : {SColor::red, SColor::blue})
            for (auto& s : complete_shrubs(first, c)) heads.push_back(std::move(s));
        auto tails = enumerate_complete(len - first);
        for (const auto& h : heads)
            for (const auto& t : tails) {
                Shrubbery l;
                l.shrubs.push_back(h);
                l.shrubs.insert(l.shrubs.end(), t.shrubs.begin(), t.shrubs.end());
                out.push_back(std::move(l));
            }
    }
    return out;
}

// ---- uprooting ----

namespace {

Shrub uproot_leftmost_shrub(const Shrub& s) {
    if (s.is_dot()) throw no_stem("dot has no stem");
    if (s.slots.size() > 1) {
        Shrub r{s.color, {}};
        Shrubbery merged = s.slots[0];
        merged.shrubs.insert(merged.shrubs.end(), s.slots[1].shrubs.begin(), s.slots[1].shrubs.end());
        r.slots.push_back(std::move(merged));
        for (size_t i = 2; i < s.slots.size(); ++i) r.slots.push_back(s.slots[i]);
        return r;
    }
    Shrub r{s.color, {uproot_leftmost(s.slots[0])}};
    return r;
}

} // namespace

Shrubbery uproot_leftmost(const Shrubbery& l) {
    Shrubbery r = l;
    for (auto& s : r.shrubs) {
        if (stem_count(Shrubbery{{s}}) > 0) {
            s = uproot_leftmost_shrub(s);
            return r;
        }
    }
    throw no_stem("shrubbery is well-tended or stem-free");
}

namespace {

Shrubbery uproot_subset_rec(const Shrubbery& l, const std::set<int>& stems, int& counter);

Shrub uproot_subset_shrub(const Shrub& s, const std::set<int>& stems, int& counter) {
    if (s.is_dot()) return s;
    // reading order: slot 1, separator 1, slot 2, separator 2, ..., slot k
    Shrub r{s.color, {}};
    Shrubbery current = uproot_subset_rec(s.slots[0], stems, counter);
    for (size_t i = 1; i < s.slots.size(); ++i) {
        int id = counter++;
        Shrubbery next = uproot_subset_rec(s.slots[i], stems, counter);
        if (stems.count(id)) {
            current.shrubs.insert(current.shrubs.end(), next.shrubs.begin(), next.shrubs.end());
        } else {
            r.slots.push_back(std::move(current));
            current = std::move(next);
        }
    }
    r.slots.push_back(std::move(current));
    return r;
}

Shrubbery uproot_subset_rec(const Shrubbery& l, const std::set<int>& stems, int& counter) {
    Shrubbery r;
    for (const auto& s : l.shrubs) r.shrubs.push_back(uproot_subset_shrub(s, stems, counter));
    return r;
}

} // namespace

Shrubbery uproot_subset(const Shrubbery& l, const std::set<int>& stems) {
    int counter = 0;
    Shrubbery r = uproot_subset_rec(l, stems, counter);
    if (!stems.empty() && *stems.rbegin() >= counter)
        throw arg_error("stem index out of range");
    return r;
}

namespace {

// stems preceding the leftmost outer stem of this shrub, in reading order;
// nullopt when the shrub is stemless
std::optional<int> outer_stem_offset(const Shrub& s) {
    if (s.is_dot()) return std::nullopt;
    if (s.slots.size() > 1) return stem_count(s.slots[0]);
    int off = 0;
    for (const auto& in : s.slots[0].shrubs) {
        auto r = outer_stem_offset(in);
        if (r) return off + *r;
        off += stem_count(Shrubbery{{in}});  // always 0: a stemless shrub
    }
    return std::nullopt;
}

int leftmost_outer_stem_id(const Shrubbery& l) {
    int before = 0;
    for (const auto& s : l.shrubs) {
        auto r = outer_stem_offset(s);
        if (r) return before + *r;
        before += stem_count(Shrubbery{{s}});
    }
    throw no_stem("shrubbery has no stem");
}

} // namespace

EFClasses ef_classes(const Shrubbery& l) {
    Predicates p = predicates(l);
    if (!p.complete || p.well_tended)
        throw arg_error("ef_classes needs a complete, not well-tended shrubbery");
    int n = p.stem_count;
    int first = leftmost_outer_stem_id(l);
    EFClasses out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> stems;
        for (int b = 0; b < n; ++b)
            if ((mask >> b) & 1) stems.insert(b);
        Shrubbery res = uproot_subset(l, stems);
        if (stems.count(first)) {
            out.f.insert(res);
        } else {
            std::set<int> with = stems;
            with.insert(first);
            out.pairs.push_back({res, uproot_subset(l, with)});
            out.e.insert(res);
        }
    }
    return out;
}

// ---- the partial order ----

namespace {

bool shrub_less(const Shrub& a, const Shrub& b);

bool shrubbery_less(const Shrubbery& a, const Shrubbery& b) {
    if (a == b) return false;
    // first shrubs
    if (a.shrubs.empty() || b.shrubs.empty()) return false;  // only the empty one has length 0
    const Shrub& ka = a.shrubs.front();
    const Shrub& kb = b.shrubs.front();
    if (length(ka) != length(kb)) return length(ka) < length(kb);
    if (!(ka == kb)) return shrub_less(ka, kb);
    Shrubbery ta{std::vector<Shrub>(a.shrubs.begin() + 1, a.shrubs.end())};
    Shrubbery tb{std::vector<Shrub>(b.shrubs.begin() + 1, b.shrubs.end())};
    return shrubbery_less(ta, tb);
}

bool shrub_less(const Shrub& a, const Shrub& b) {
    if (a == b) return false;
    if (a.color != b.color) return false;  // incomparable
    if (a.is_dot() || b.is_dot()) return false;  // equal lengths: both dots, handled above
    const Shrubbery& la = a.slots.front();
    const Shrubbery& lb = b.slots.front();
    if (length(la) != length(lb)) return length(la) < length(lb);
    if (!(la == lb)) return shrubbery_less(la, lb);
    // first slots equal: compare the tails as shrubs of the same color
    if (a.slots.size() == 1 || b.slots.size() == 1)
        return false;  // lengths force both to be singleton, hence equal
    Shrub ta{a.color, std::vector<Shrubbery>(a.slots.begin() + 1, a.slots.end())};
    Shrub tb{b.color, std::vector<Shrubbery>(b.slots.begin() + 1, b.slots.end())};
    if (ta == tb) return false;
    return shrub_less(ta, tb);
}

} // namespace

bool order_leq(const Shrubbery& a, const Shrubbery& b) {
    if (length(a) != length(b)) throw length_mismatch("order_leq needs equal lengths");
    return a == b || shrubbery_less(a, b);
}

bool euler_check(int n) {
    if (n < 0) throw arg_error("euler_check: n must be >= 0");
    std::string w = alternating_word('s', 2 * n);
    long lhs = 0;
    for (const auto& l : enumerate_subword_shrubs(w, true, true))
        lhs += length(l) % 2 == 0 ? 1 : -1;
    DgComplex c = build_tilde_C(n, true);
    long rhs = 0;
    for (const auto& bucket : c.monos)
        for (const auto& m : bucket) rhs += m.size() % 2 == 0 ? 1 : -1;
    return lhs == rhs;
}

} // namespace twocolor
