#include "trivzero/report.hpp"

namespace trivzero {

namespace {

std::vector<long> coeff_digits(const BigInt& c, long p, long prec) {
    std::vector<long> d(static_cast<size_t>(prec));
    BigInt v = c;
    for (long i = 0; i < prec; ++i) {
        d[static_cast<size_t>(i)] = static_cast<long>(v % p);
        v /= p;
    }
    return d;
}

} // namespace

json encode_padic(const PadicInt& x) {
    json j;
    j["p"] = x.prime();
    j["precision"] = x.prec();
    j["digits"] = x.digits();
    return j;
}

json encode_unramified(const UnramifiedElt& x) {
    json j;
    j["p"] = x.p();
    j["precision"] = x.prec();
    j["f"] = x.f();
    json poly = json::array();
    for (const BigInt& c : x.coeffs())
        poly.push_back(coeff_digits(mod_reduce(c, pow_int(BigInt(x.p()), static_cast<unsigned long>(x.prec()))),
                                    x.p(), x.prec()));
    j["poly"] = poly;
    return j;
}

json encode_cup(const CupProductValue& v) {
    json j;
    j["q"] = v.q;
    j["n"] = v.N;
    j["p"] = v.p;
    j["r"] = v.r;
    j["chi"] = v.chi_label;
    j["value"] = encode_unramified(v.value);
    j["value_plain"] = encode_unramified(v.value_plain);
    j["adjustment"] = encode_unramified(v.adjustment);
    j["valuation"] = v.valuation;
    j["threshold_r0"] = v.threshold_r0;
    j["embedding"] = v.embedding;
    return j;
}

json encode_l_invariant(const LInvariantResult& li) {
    json j;
    j["chi"] = li.chi_label;
    j["p"] = li.p;
    j["l_invariant"] = encode_unramified(li.l_invariant);
    j["derivative"] = encode_unramified(li.derivative);
    j["achieved_precision"] = li.achieved_precision;
    j["nonvanishing_certified"] = li.nonvanishing_certified;
    return j;
}

json make_envelope(const std::string& command, json parameters) {
    json j;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    return j;
}

} // namespace trivzero
