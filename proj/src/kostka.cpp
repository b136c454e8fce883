#include "kostka/kostka.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "kostka/tableaux.hpp"

namespace kostka {

std::string_view method_name(Method m) {
    switch (m) {
    case Method::det_formula:
        return "det";
    case Method::recursion:
        return "rec";
    case Method::oracle:
        return "oracle";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "det" || name == "det_formula")
        return Method::det_formula;
    if (name == "rec" || name == "recursion")
        return Method::recursion;
    if (name == "oracle")
        return Method::oracle;
    return std::nullopt;
}

namespace {

void require_same_weight(const Partition& alpha, const Content& beta) {
    if (alpha.n() != beta.n())
        throw WeightMismatch("shape " + to_string(alpha.parts()) + " has weight " + std::to_string(alpha.n()) +
                             " but content " + to_string(beta.parts()) + " has weight " +
                             std::to_string(beta.n()));
}

class StripRecursion {
  public:
    explicit StripRecursion(const Content& beta) : beta_(beta) {}

    Count operator()(const Partition& alpha, int len) {
        ++nodes_;
        if (len == 0)
            return alpha.k() == 0 ? 1 : 0;
        if (len == 1)
            return alpha.k() == 1 ? 1 : 0; // weights already agree
        auto key = std::make_pair(alpha.seq(), len);
        if (auto hit = memo_.find(key); hit != memo_.end())
            return hit->second;
        Count total = 0;
        for (const auto& gamma : horizontal_strips(alpha, beta_[len - 1]))
            total += (*this)(Partition(alpha.seq() - gamma), len - 1);
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::size_t nodes() const { return nodes_; }

  private:
    const Content& beta_;
    std::map<std::pair<IntSeq, int>, Count> memo_;
    std::size_t nodes_ = 0;
};

} // namespace

Count kostka_det(const Partition& alpha, MuEvaluator& mu, const Limits& limits, std::size_t* terms) {
    require_same_weight(alpha, mu.rho());
    Count total = 0;
    std::vector<int> buffer;
    const std::size_t visited =
        for_each_nonnegative_shift(alpha, limits.perm_cap, [&](std::span<const int> shifted, int sign) {
            buffer.assign(shifted.begin(), shifted.end());
            Count term = mu(IntSeq(buffer));
            if (sign > 0)
                total += term;
            else
                total -= term;
        });
    if (terms)
        *terms = visited;
    if (total < 0)
        throw Error("signed sum is negative for " + to_string(alpha.parts()) + ", " +
                    to_string(mu.rho().parts()));
    return total;
}

Count kostka_det(const Partition& alpha, const Content& beta, const Limits& limits, std::size_t* terms) {
    MuEvaluator mu(beta);
    return kostka_det(alpha, mu, limits, terms);
}

Count kostka_rec(const Partition& alpha, const Content& beta, std::size_t* nodes) {
    require_same_weight(alpha, beta);
    StripRecursion rec(beta);
    Count value = rec(alpha, beta.len());
    if (nodes)
        *nodes = rec.nodes();
    return value;
}

KostkaResult kostka(const IntSeq& alpha_seq, const IntSeq& beta_seq, Method method, const Limits& limits) {
    KostkaResult result;
    result.method = method;
    result.alpha = Partition(alpha_seq);
    result.beta = normalize_content(beta_seq);
    if (result.alpha.n() != result.beta.n()) {
        result.value = 0;
        return result;
    }
    switch (method) {
    case Method::det_formula:
        result.value = kostka_det(result.alpha, result.beta, limits, &result.terms_evaluated);
        break;
    case Method::recursion:
        result.value = kostka_rec(result.alpha, result.beta, &result.terms_evaluated);
        break;
    case Method::oracle:
        result.value = count_ssyt(result.alpha, result.beta, limits, &result.terms_evaluated);
        break;
    }
    return result;
}

Count gordon_product(int p, int q) {
    using boost::multiprecision::cpp_rational;
    if (p < 1 || q < 1)
        throw Error("gordon_product needs p, q >= 1");
    cpp_rational product = 1;
    for (int i = 1; i <= p; ++i)
        for (int j = i; j <= p; ++j)
            product *= cpp_rational(q + i + j - 1, i + j - 1);
    if (boost::multiprecision::denominator(product) != 1)
        throw Error("Gordon product is not an integer");
    return boost::multiprecision::numerator(product);
}

std::vector<Partition> partitions_in_box(int n, int max_rows, int max_part) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.emplace_back(IntSeq(parts));
            return;
        }
        if (static_cast<int>(parts.size()) == max_rows)
            return;
        for (int part = std::min(left, cap); part >= 1; --part) {
            parts.push_back(part);
            self(self, left - part, part);
            parts.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

std::vector<GordonTerm> gordon_terms(int p, int q, const Limits& limits) {
    if (p < 1 || q < 1)
        throw Error("gordon_sum needs p, q >= 1");
    if (p * q > limits.gordon_max_pq)
        throw SizeLimit("gordon_sum limited to p*q <= " + std::to_string(limits.gordon_max_pq));
    std::vector<Count> choose(p + 1);
    for (int l = 0; l <= p; ++l)
        choose[l] = multinomial(IntSeq{l, p - l});

    std::vector<GordonTerm> terms;
    for (int n = 1; n <= p * q; ++n) {
        const auto shapes = partitions_in_box(n, p, q);
        if (shapes.empty())
            continue;
        for (const auto& rho : compositions_of(n)) {
            if (rho.len() > p)
                continue;
            for (const auto& alpha : shapes)
                terms.push_back({alpha, rho, choose[rho.len()]});
        }
    }
    return terms;
}

Count gordon_sum(int p, int q, const Limits& limits) {
    Count total = 1; // the empty tableau
    for (const auto& term : gordon_terms(p, q, limits))
        total += term.multiplicity * kostka_rec(term.alpha, term.rho);
    return total;
}

} // namespace kostka
