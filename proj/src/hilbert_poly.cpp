#include "hilbforest/hilbert_poly.hpp"

#include "hilbforest/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hilbforest {

const char* to_string(AdmissibilityStage stage) noexcept {
    switch (stage) {
        case AdmissibilityStage::ZeroPolynomial: return "zero-polynomial";
        case AdmissibilityStage::NonIntegerConstant: return "non-integer-constant";
        case AdmissibilityStage::NonPositiveConstant: return "non-positive-constant";
        case AdmissibilityStage::NegativeConstantGap: return "negative-constant-gap";
        case AdmissibilityStage::NonAdmissibleDifference: return "non-admissible-difference";
    }
    return "unknown";
}

namespace {

void require_weakly_decreasing(std::span<const int> parts, int floor, const char* what) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] < floor)
            throw ValidationError(std::string(what) + ": part " + std::to_string(parts[j]) +
                                  " below " + std::to_string(floor));
        if (j + 1 < parts.size() && parts[j] < parts[j + 1])
            throw ValidationError(std::string(what) + ": parts not weakly decreasing");
    }
}

}  // namespace

std::vector<int> conjugate(std::span<const int> parts, std::optional<int> length) {
    require_weakly_decreasing(parts, 0, "conjugate");
    const int largest = parts.empty() ? 0 : parts.front();
    const int len = length.value_or(largest);
    if (len < largest)
        throw ValidationError("conjugate: length " + std::to_string(len) + " shorter than largest part " +
                              std::to_string(largest));
    std::vector<int> out(static_cast<std::size_t>(len), 0);
    for (int p : parts)
        for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
    return out;
}

GotzmannPartition::GotzmannPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ValidationError("Gotzmann partition must be nonempty");
    require_weakly_decreasing(parts_, 0, "Gotzmann partition");
}

int GotzmannPartition::leading_run() const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), parts_.front()));
}

MacaulayPartition::MacaulayPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ValidationError("Macaulay partition must be nonempty");
    require_weakly_decreasing(parts_, 1, "Macaulay partition");
}

MacaulayPartition to_macaulay(const GotzmannPartition& b) {
    std::vector<int> e{b.length()};
    for (int x : conjugate(b.parts())) e.push_back(x);
    return MacaulayPartition(std::move(e));
}

GotzmannPartition to_gotzmann(const MacaulayPartition& e) {
    const auto& p = e.parts();
    return GotzmannPartition(conjugate(std::span<const int>(p).subspan(1), p.front()));
}

AdmissiblePolynomial AdmissiblePolynomial::from_gotzmann(std::vector<int> parts) {
    return AdmissiblePolynomial(GotzmannPartition(std::move(parts)));
}

AdmissiblePolynomial AdmissiblePolynomial::from_macaulay(std::vector<int> parts) {
    return AdmissiblePolynomial(to_gotzmann(MacaulayPartition(std::move(parts))));
}

AdmissiblePolynomial AdmissiblePolynomial::constant(int m) {
    if (m < 1) throw ValidationError("constant Hilbert polynomial must be positive");
    return from_gotzmann(std::vector<int>(static_cast<std::size_t>(m), 0));
}

mpz_class AdmissiblePolynomial::evaluate(const mpz_class& i) const {
    mpz_class acc = 0;
    const auto& b = b_.parts();
    for (std::size_t j = 0; j < b.size(); ++j) acc += binomial(i + b[j] - static_cast<long>(j), b[j]);
    return acc;
}

RationalPolynomial AdmissiblePolynomial::dense() const {
    RationalPolynomial acc;
    const auto& b = b_.parts();
    for (std::size_t j = 0; j < b.size(); ++j)
        acc += RationalPolynomial::binomial(b[j] - static_cast<long>(j), b[j]);
    return acc;
}

mpq_class AdmissiblePolynomial::leading_coefficient() const {
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(degree()));
    mpq_class lc(parametrized_degree(), factorial);
    lc.canonicalize();
    return lc;
}

std::string AdmissiblePolynomial::binomial_form() const {
    std::ostringstream os;
    const auto& b = b_.parts();
    for (std::size_t j = 0; j < b.size(); ++j) {
        const long offset = b[j] - static_cast<long>(j);
        if (j) os << '+';
        os << "C(t";
        if (offset > 0) os << '+' << offset;
        else if (offset < 0) os << offset;
        os << ',' << b[j] << ')';
    }
    return os.str();
}

AdmissiblePolynomial lift(const AdmissiblePolynomial& hp) {
    std::vector<int> parts = hp.gotzmann().parts();
    for (int& x : parts) ++x;
    return AdmissiblePolynomial::from_gotzmann(std::move(parts));
}

AdmissiblePolynomial plus(const AdmissiblePolynomial& hp) {
    std::vector<int> parts = hp.gotzmann().parts();
    parts.push_back(0);
    return AdmissiblePolynomial::from_gotzmann(std::move(parts));
}

std::optional<AdmissiblePolynomial> nabla(const AdmissiblePolynomial& hp) {
    if (hp.degree() == 0) return std::nullopt;
    std::vector<int> parts;
    for (int x : hp.gotzmann().parts())
        if (x >= 1) parts.push_back(x - 1);
    return AdmissiblePolynomial::from_gotzmann(std::move(parts));
}

AdmissiblePolynomial recover(const RationalPolynomial& q) {
    if (q.is_zero())
        throw NotAdmissible(AdmissibilityStage::ZeroPolynomial, "the zero polynomial is not admissible");
    if (q.degree() == 0) {
        const mpq_class& c = q.coefficient(0);
        if (c.get_den() != 1)
            throw NotAdmissible(AdmissibilityStage::NonIntegerConstant,
                                "constant " + q.to_string() + " is not an integer");
        if (c <= 0)
            throw NotAdmissible(AdmissibilityStage::NonPositiveConstant,
                                "constant " + q.to_string() + " is not positive");
        if (!c.get_num().fits_sint_p() || c.get_num() > (1 << 24))
            throw ResourceError("constant " + q.to_string() + " too large for a Gotzmann partition");
        return AdmissiblePolynomial::constant(static_cast<int>(c.get_num().get_si()));
    }
    const RationalPolynomial difference = q.backward_difference();
    std::optional<AdmissiblePolynomial> inner;
    try {
        inner = recover(difference);
    } catch (const NotAdmissible& e) {
        throw NotAdmissible(AdmissibilityStage::NonAdmissibleDifference,
                            "difference " + difference.to_string() + " of " + q.to_string() +
                                " is not admissible (" + e.what() + ")");
    }
    AdmissiblePolynomial lifted = lift(*inner);
    const RationalPolynomial gap = q - lifted.dense();
    // gap has zero backwards difference, so it is constant.
    const mpq_class delta = gap.coefficient(0);
    if (delta.get_den() != 1)
        throw NotAdmissible(AdmissibilityStage::NonIntegerConstant,
                            "constant gap " + gap.to_string() + " of " + q.to_string() + " is not an integer");
    if (delta < 0)
        throw NotAdmissible(AdmissibilityStage::NegativeConstantGap,
                            "constant gap " + gap.to_string() + " of " + q.to_string() + " is negative");
    if (delta > (1 << 24)) throw ResourceError("constant gap of " + q.to_string() + " too large");
    std::vector<int> parts = lifted.gotzmann().parts();
    parts.resize(parts.size() + static_cast<std::size_t>(delta.get_num().get_si()), 0);
    return AdmissiblePolynomial::from_gotzmann(std::move(parts));
}

std::string PathWord::to_string(bool application_order, bool compact) const {
    std::vector<Step> order = steps_;
    if (!application_order) std::reverse(order.begin(), order.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && order[j] == order[i]) ++j;
        const char symbol = static_cast<char>(order[i]);
        if (i) os << ' ';
        if (compact) {
            os << symbol;
            if (j - i > 1) os << '^' << (j - i);
        } else {
            for (std::size_t k = i; k < j; ++k) os << (k > i ? " " : "") << symbol;
        }
        i = j;
    }
    return os.str();
}

PathWord PathWord::parse(const std::string& text, bool application_order) {
    std::vector<Step> steps;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "1") return PathWord();
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        Step step;
        const char c = text[pos];
        if (c == 'P' || c == 'p') {
            step = Step::Plus;
            ++pos;
        } else if (c == 'L' || c == 'l') {
            step = Step::Lift;
            ++pos;
        } else if (text.compare(pos, 2, "\xCE\x9B") == 0) {  // Λ
            step = Step::Lift;
            pos += 2;
        } else {
            throw ParseError("expected P or L in path word", pos, std::string(1, c));
        }
        std::size_t count = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw ParseError("expected exponent", pos);
            if (pos - start > 6) throw ParseError("exponent too large", start);
            count = std::stoul(text.substr(start, pos - start));
        }
        steps.insert(steps.end(), count, step);
    }
    if (!application_order) std::reverse(steps.begin(), steps.end());
    return PathWord(std::move(steps));
}

PathWord path_from_root(const AdmissiblePolynomial& hp) {
    // hp = L^{b_r} P L^{b_{r-1}-b_r} P ... P L^{b_1-b_2} (1), applied right to left.
    const auto& b = hp.gotzmann().parts();
    std::vector<Step> steps;
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
        steps.insert(steps.end(), static_cast<std::size_t>(b[j] - b[j + 1]), Step::Lift);
        steps.push_back(Step::Plus);
    }
    steps.insert(steps.end(), static_cast<std::size_t>(b.back()), Step::Lift);
    return PathWord(std::move(steps));
}

AdmissiblePolynomial node_at(const PathWord& word) {
    std::vector<int> parts{0};
    for (Step s : word.steps()) {
        if (s == Step::Plus) parts.push_back(0);
        else
            for (int& x : parts) ++x;
    }
    return AdmissiblePolynomial::from_gotzmann(std::move(parts));
}

}  // namespace hilbforest
