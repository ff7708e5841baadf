#include "colorlie/bicharacter.hpp"

#include "colorlie/errors.hpp"

namespace colorlie {

Pairing::Pairing(GroupPtr group, std::vector<std::vector<RootScalar>> values, unchecked_t)
    : group_(std::move(group)), values_(std::move(values)) {
    const std::size_t s = group_->num_generators();
    if (values_.size() != s) throw ValidationError("value matrix must be s x s");
    for (const auto& row : values_)
        if (row.size() != s) throw ValidationError("value matrix must be s x s");
}

Pairing::Pairing(GroupPtr group, std::vector<std::vector<RootScalar>> values)
    : Pairing(std::move(group), std::move(values), unchecked_t{}) {
    validate();
}

Pairing Pairing::unchecked(GroupPtr group, std::vector<std::vector<RootScalar>> values) {
    return Pairing(std::move(group), std::move(values), unchecked_t{});
}

void Pairing::validate() const {
    const std::size_t s = group_->num_generators();
    const auto& relations = group_->relations();
    for (std::size_t r = 0; r < relations.size(); ++r) {
        for (std::size_t j = 0; j < s; ++j) {
            RootScalar left, right;
            for (std::size_t i = 0; i < s; ++i) {
                if (relations[r][i] == 0) continue;
                left = left * pow(values_[i][j], relations[r][i]);
                right = right * pow(values_[j][i], relations[r][i]);
            }
            if (!left.is_identity() || !right.is_identity())
                throw ValidationError("values do not factor through relation " + std::to_string(r) +
                                      " at generator " + group_->generator_names()[j]);
        }
    }
}

RootScalar Pairing::eval(const GroupElement& a, const GroupElement& b) const {
    if (a.presentation() != group_ || b.presentation() != group_)
        throw PresentationMismatch("evaluating a pairing on foreign elements");
    RootScalar out;
    const std::size_t s = values_.size();
    for (std::size_t i = 0; i < s; ++i) {
        if (a.word()[i] == 0) continue;
        for (std::size_t j = 0; j < s; ++j) {
            if (b.word()[j] == 0) continue;
            out = out * pow(values_[i][j], a.word()[i] * b.word()[j]);
        }
    }
    return out;
}

bool Pairing::is_symmetric() const {
    const std::size_t s = values_.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i; j < s; ++j)
            if (!(values_[i][j] * values_[j][i]).is_identity()) return false;
    return true;
}

int parity(const Bicharacter& chi, const GroupElement& g) {
    auto sign = is_sign(chi.eval(g, g));
    if (!sign)
        throw NotASign("chi(g,g) = " + to_string(chi.eval(g, g)) + " is not a sign at g = " +
                       to_string(g));
    return *sign;
}

Bicharacter chi0(const Bicharacter& chi) {
    const std::size_t s = chi.size();
    const auto& group = chi.group();
    std::vector<int> p(s);
    for (std::size_t i = 0; i < s; ++i) p[i] = parity(chi, group->generator(i));
    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (p[i] < 0 && p[j] < 0) values[i][j] = RootScalar::minus_one();
    return Bicharacter(group, std::move(values));
}

Bicharacter antisymmetrize(const Cocycle& sigma) {
    const std::size_t s = sigma.size();
    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            values[i][j] = sigma.value(i, j) * inverse(sigma.value(j, i));
    return Bicharacter(sigma.group(), std::move(values));
}

Bicharacter twist_character(const Bicharacter& chi, const Cocycle& sigma) {
    if (chi.group() != sigma.group())
        throw PresentationMismatch("twisting a bicharacter by a cocycle on a different group");
    const std::size_t s = chi.size();
    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            values[i][j] = chi.value(i, j) * sigma.value(i, j) * inverse(sigma.value(j, i));
    return Bicharacter(chi.group(), std::move(values));
}

bool is_alternating(const Bicharacter& chi) {
    if (!chi.is_symmetric()) return false;
    for (std::size_t i = 0; i < chi.size(); ++i)
        if (!chi.value(i, i).is_identity()) return false;
    return true;
}

Bicharacter pointwise_product(const Bicharacter& a, const Bicharacter& b) {
    if (a.group() != b.group())
        throw PresentationMismatch("pointwise product of bicharacters on different groups");
    const std::size_t s = a.size();
    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) values[i][j] = a.value(i, j) * b.value(i, j);
    return Bicharacter(a.group(), std::move(values));
}

Bicharacter pointwise_inverse(const Bicharacter& a) {
    const std::size_t s = a.size();
    std::vector<std::vector<RootScalar>> values(s, std::vector<RootScalar>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) values[i][j] = inverse(a.value(i, j));
    return Bicharacter(a.group(), std::move(values));
}

}  // namespace colorlie
