#include "dirichlet/characters.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "dirichlet/error.hpp"

namespace dirichlet {

namespace {

std::string component_name(const ModulusFactorization& f, std::size_t j) {
    std::size_t odd = j;
    if (f.has_sign_component()) {
        if (j == 0) return "a";
        --odd;
    }
    if (f.has_five_component()) {
        if (j == 1) return "b";
        --odd;
    }
    return odd == 0 ? "c" : "c" + std::to_string(odd + 1);
}

i64 parse_int(std::string_view text, std::string_view label) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::invalid_argument, "malformed character label: " + std::string(label));
    }
    return v;
}

}  // namespace

std::shared_ptr<const std::vector<cplx>> unit_roots(i64 order) {
    static std::mutex mutex;
    static std::map<i64, std::shared_ptr<const std::vector<cplx>>> cache;

    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;

    auto table = std::make_shared<std::vector<cplx>>(static_cast<std::size_t>(order));
    for (i64 t = 0; 2 * t <= order; ++t) {
        cplx z;
        if ((4 * t) % order == 0) {
            static constexpr cplx quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            z = quarter[(4 * t) / order];
        } else {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(order);
            z = {std::cos(angle), std::sin(angle)};
        }
        (*table)[static_cast<std::size_t>(t)] = z;
        if (t > 0) (*table)[static_cast<std::size_t>(order - t)] = std::conj(z);
    }
    cache.emplace(order, table);
    return table;
}

std::string_view to_string(CharacterClass c) noexcept {
    switch (c) {
        case CharacterClass::principal: return "principal";
        case CharacterClass::real_nonprincipal: return "real-nonprincipal";
        case CharacterClass::complex: return "complex";
    }
    return "unknown";
}

std::shared_ptr<const ResidueIndexTable> make_index_table(const ModulusFactorization& f) {
    auto table = std::make_shared<ResidueIndexTable>();
    table->modulus = f;
    table->orders = f.component_orders();
    table->systems.resize(static_cast<std::size_t>(f.k));
    for (i64 r = 1; r < f.k; ++r) {
        if (gcd(r, f.k) != 1) continue;
        table->systems[static_cast<std::size_t>(r)] = index_system(r, f).components();
    }
    return table;
}

Character::Character(const ModulusFactorization& f, std::vector<i64> exponents)
    : Character(make_index_table(f), std::move(exponents)) {}

Character::Character(std::shared_ptr<const ResidueIndexTable> table, std::vector<i64> exponents)
    : table_(std::move(table)), exponents_(std::move(exponents)) {
    if (exponents_.size() != table_->orders.size()) {
        throw Error(ErrorKind::invalid_argument,
                    "character mod " + std::to_string(k()) + " needs " +
                        std::to_string(table_->orders.size()) + " exponents");
    }
    build();
}

void Character::build() {
    const auto& orders = table_->orders;
    root_order_ = 1;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        exponents_[j] = mod(exponents_[j], orders[j]);
        root_order_ = std::lcm(root_order_, orders[j]);
    }
    const auto roots = unit_roots(root_order_);
    const auto n = static_cast<std::size_t>(k());
    phases_.assign(n, -1);
    values_.assign(n, cplx{0.0, 0.0});
    for (std::size_t r = 0; r < n; ++r) {
        const auto& sys = table_->systems[r];
        if (sys.empty()) continue;
        i64 t = 0;
        for (std::size_t j = 0; j < orders.size(); ++j) {
            t = mod(t + mul_mod(exponents_[j] * (root_order_ / orders[j]), sys[j], root_order_), root_order_);
        }
        phases_[r] = t;
        values_[r] = (*roots)[static_cast<std::size_t>(t)];
    }
}

std::optional<i64> Character::phase(i64 n) const {
    const i64 t = phases_[static_cast<std::size_t>(mod(n, k()))];
    if (t < 0) return std::nullopt;
    return t;
}

cplx Character::operator()(i64 n) const { return values_[static_cast<std::size_t>(mod(n, k()))]; }

std::string Character::label() const {
    std::string out = "chi[k=" + std::to_string(k()) + ";";
    for (std::size_t j = 0; j < exponents_.size(); ++j) {
        if (j > 0) out += ',';
        out += component_name(modulus(), j) + "=" + std::to_string(exponents_[j]);
    }
    out += ']';
    return out;
}

std::vector<Character> enumerate_characters(const ModulusFactorization& f) {
    auto table = make_index_table(f);
    const auto& orders = table->orders;
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(f.group_order));
    std::vector<i64> e(orders.size(), 0);
    while (true) {
        out.emplace_back(table, e);
        // odometer, last component fastest -> lexicographic order
        std::size_t j = orders.size();
        while (j > 0) {
            --j;
            if (++e[j] < orders[j]) break;
            e[j] = 0;
            if (j == 0) return out;
        }
        if (orders.empty()) return out;
    }
}

cplx eval_character(const Character& chi, i64 n) { return chi(n); }

CharacterClass classify(const Character& chi) {
    bool principal = true;
    bool real = true;
    const auto orders = chi.component_orders();
    const auto exps = chi.exponents();
    for (std::size_t j = 0; j < orders.size(); ++j) {
        if (exps[j] != 0) principal = false;
        if ((2 * exps[j]) % orders[j] != 0) real = false;
    }
    if (principal) return CharacterClass::principal;
    return real ? CharacterClass::real_nonprincipal : CharacterClass::complex;
}

Character conjugate(const Character& chi) {
    std::vector<i64> e(chi.exponents().begin(), chi.exponents().end());
    for (auto& x : e) x = -x;
    return Character(chi.modulus(), std::move(e));
}

i64 orthogonality_sum(std::span<const Character> group, i64 n, i64 m) {
    if (group.empty()) throw Error(ErrorKind::invalid_argument, "empty character group");
    const i64 k = group.front().k();
    if (gcd(mod(m, k), k) != 1) {
        throw Error(ErrorKind::not_coprime, std::to_string(m) + " is not coprime to " + std::to_string(k));
    }
    cplx total{0.0, 0.0};
    for (const auto& chi : group) total += chi(n) * std::conj(chi(m));
    const double rounded = std::round(total.real());
    if (std::abs(total.imag()) >= 1e-9 || std::abs(total.real() - rounded) >= 1e-9) {
        throw Error(ErrorKind::precision_failure, "orthogonality sum is not an integer");
    }
    return static_cast<i64>(rounded);
}

i64 orthogonality_sum(const ModulusFactorization& f, i64 n, i64 m) {
    const auto group = enumerate_characters(f);
    return orthogonality_sum(group, n, m);
}

Character parse_character_label(std::string_view label) {
    const auto fail = [&] {
        return Error(ErrorKind::invalid_argument, "malformed character label: " + std::string(label));
    };
    constexpr std::string_view prefix = "chi[k=";
    if (!label.starts_with(prefix) || !label.ends_with("]")) throw fail();
    std::string_view body = label.substr(prefix.size(), label.size() - prefix.size() - 1);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw fail();
    const i64 k = parse_int(body.substr(0, semi), label);
    const auto f = factorize_modulus(k);
    const auto orders = f.component_orders();

    std::vector<i64> exps;
    std::string_view rest = body.substr(semi + 1);
    std::size_t j = 0;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || j >= orders.size()) throw fail();
        if (item.substr(0, eq) != component_name(f, j)) throw fail();
        const i64 e = parse_int(item.substr(eq + 1), label);
        if (e < 0 || e >= orders[j]) throw fail();
        exps.push_back(e);
        ++j;
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (exps.size() != orders.size()) throw fail();
    return Character(f, std::move(exps));
}

}  // namespace dirichlet
