#include "towerlab/factor.hpp"
#include "towerlab/ff.hpp"
#include "towerlab/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace towerlab {

Embedding::Embedding(FieldPtr src, FieldPtr dst, FieldElement gen_image)
    : src_(std::move(src)), dst_(std::move(dst)), gen_image_(std::move(gen_image)) {
    gen_powers_.reserve(src_->degree());
    FieldElement acc = dst_->one();
    for (int i = 0; i < src_->degree(); ++i) {
        gen_powers_.push_back(acc);
        acc = acc * gen_image_;
    }
}

FieldElement Embedding::operator()(const FieldElement& a) const {
    if (!a.valid() || !a.field()->same(*src_))
        throw std::invalid_argument("embed: element is not from the source field");
    FieldElement acc = dst_->zero();
    auto coeffs = a.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        acc = acc + dst_->from_int(coeffs[i]) * gen_powers_[i];
    }
    return acc;
}

const Embedding& Embedding::get(const FieldPtr& src, const FieldPtr& dst) {
    if (src->characteristic() != dst->characteristic())
        throw std::invalid_argument("embedding requires equal characteristic");
    if (dst->degree() % src->degree() != 0)
        throw std::invalid_argument("embedding requires source degree dividing target degree");

    static std::mutex mu;
    static std::map<std::pair<std::string, std::string>, std::unique_ptr<Embedding>> cache;

    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(src->key(), dst->key());
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    FieldElement image;
    if (src->same(*dst)) {
        image = src->degree() >= 2 ? src->generator() : src->one();
    } else {
        // Root of the source modulus in the target field with the smallest
        // coefficient code; any root works, this choice pins determinism.
        std::vector<std::int64_t> mod_ints(src->modulus().begin(), src->modulus().end());
        Polynomial mod_dst = Polynomial::from_int_coeffs(dst, mod_ints);
        auto roots = roots_in_field(mod_dst, dst);
        if (roots.empty()) throw std::logic_error("source modulus has no root in target field");
        image = roots.front();  // roots_in_field sorts by code
    }
    auto owned = std::unique_ptr<Embedding>(new Embedding(src, dst, std::move(image)));
    const Embedding& ref = *owned;
    cache.emplace(std::move(key), std::move(owned));
    return ref;
}

}  // namespace towerlab
