#include "frog/registry.hpp"

#include <map>
#include <memory>

namespace frog {

namespace {

// Published decimal constants of ECCFROG522PP.
constexpr const char* kFrogP =
    "68647976601306097149819007990813932172694353001433054093944634591855431833976560"
    "52122559640661454554977296311391480858037121987999716643812574028291115058039";
constexpr const char* kFrogB =
    "66113913618419585086045246993774479113899949001297542130776831122509641950938825"
    "10934154923371011820554254572559896136823993565633006955666197428760619911";
constexpr const char* kFrogN =
    "68647976601306097149819007990813932172694353001433054093944634591855431833976547"
    "07839930998069072437178898634323218419738245117910726080434907495541251156283";
constexpr const char* kFrogGx =
    "11483659870055913964623536371313631260976767098619949198405802655079012131788815"
    "900015100098140592301158799072401266653548293144687306675149107389798128134";
constexpr const char* kFrogGy =
    "30386944574284420243881321173706779431273439385121134630343186387096004511363257"
    "47025138610802391491914091276481105699353919202494902810686593030172286395020";
constexpr const char* kFrogT =
    "1344282628642592382117798397677068262438298876870088990563377666532749863901757";
constexpr const char* kFrogD =
    "-2565209485485220092318248975556270940081378341090753842388125912829406382749836"
    "8666061775444493529979367517268977200639940503231230605133844631506932712545107";
constexpr const char* kFrogTwist =
    "68647976601306097149819007990813932172694353001433054093944634591855431833976573"
    "96405188283253836672775693988459743296335998858088707207190240561040978959797";

CurveParams make_frog() {
    BigInt p{std::string(kFrogP)};
    auto field = std::make_shared<const PrimeField>(p);
    WeierstrassEq eq{field, p - BigInt{9ul}, BigInt{std::string(kFrogB)}};
    Point g = Point::affine(field->element(BigInt{std::string(kFrogGx)}),
                            field->element(BigInt{std::string(kFrogGy)}));
    PublishedFacts facts;
    facts.trace = BigInt{std::string(kFrogT)};
    facts.cm_discriminant = BigInt{std::string(kFrogD)};
    facts.twist_order = BigInt{std::string(kFrogTwist)};
    facts.expected_twist_factor_bits = {{500, 510}};
    facts.claimed_p_bits = 522;
    facts.claimed_n_bits = 521;
    Provenance prov{"ECCFrog522PP|v1", 1294798, 0};
    return CurveParams("eccfrog522pp", std::move(eq), std::move(g),
                       BigInt{std::string(kFrogN)}, 1, prov, std::move(facts));
}

CurveParams make_standard(const std::string& name, const char* p_hex, const BigInt& a,
                          const char* b_hex, const char* gx_hex, const char* gy_hex,
                          const char* n_hex, size_t claimed_bits) {
    BigInt p{std::string(p_hex)};
    auto field = std::make_shared<const PrimeField>(p);
    WeierstrassEq eq{field, a, BigInt{std::string(b_hex)}};
    Point g = Point::affine(field->element(BigInt{std::string(gx_hex)}),
                            field->element(BigInt{std::string(gy_hex)}));
    BigInt n{std::string(n_hex)};
    PublishedFacts facts;
    facts.trace = p + BigInt{1ul} - n;
    facts.cm_discriminant = facts.trace * facts.trace - BigInt{4ul} * p;
    facts.twist_order = BigInt{2ul} * (p + BigInt{1ul}) - n;
    facts.claimed_p_bits = claimed_bits;
    facts.claimed_n_bits = claimed_bits;
    return CurveParams(name, std::move(eq), std::move(g), std::move(n), 1, std::nullopt,
                       std::move(facts));
}

std::map<std::string, CurveParams> build_registry() {
    std::map<std::string, CurveParams> reg;
    reg.emplace("eccfrog522pp", make_frog());
    reg.emplace("secp256k1",
                make_standard(
                    "secp256k1",
                    "0xfffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f",
                    BigInt{0ul},
                    "0x7",
                    "0x79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798",
                    "0x483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8",
                    "0xfffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141", 256));
    reg.emplace("p256",
                make_standard(
                    "p256",
                    "0xffffffff00000001000000000000000000000000ffffffffffffffffffffffff",
                    BigInt{-3l},
                    "0x5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b",
                    "0x6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296",
                    "0x4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5",
                    "0xffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551", 256));
    reg.emplace("p384",
                make_standard(
                    "p384",
                    "0xfffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffeffffffff00000"
                    "00000000000ffffffff",
                    BigInt{-3l},
                    "0xb3312fa7e23ee7e4988e056be3f82d19181d9c6efe8141120314088f5013875ac656398d8a2ed1"
                    "9d2a85c8edd3ec2aef",
                    "0xaa87ca22be8b05378eb1c71ef320ad746e1d3b628ba79b9859f741e082542a385502f25dbf5529"
                    "6c3a545e3872760ab7",
                    "0x3617de4a96262c6f5d9e98bf9292dc29f8f41dbd289a147ce9da3113b5f0b8c00a60b1ce1d7e81"
                    "9d7a431d7c90ea0e5f",
                    "0xffffffffffffffffffffffffffffffffffffffffffffffffc7634d81f4372ddf581a0db248b0a7"
                    "7aecec196accc52973",
                    384));
    reg.emplace("p521",
                make_standard(
                    "p521",
                    "0x1fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff"
                    "fffffffffffffffffffffffffffffffffffffffffffffffffffff",
                    BigInt{-3l},
                    "0x51953eb9618e1c9a1f929a21a0b68540eea2da725b99b315f3b8b489918ef109e156193951ec7e"
                    "937b1652c0bd3bb1bf073573df883d2c34f1ef451fd46b503f00",
                    "0xc6858e06b70404e9cd9e3ecb662395b4429c648139053fb521f828af606b4d3dbaa14b5e77efe7"
                    "5928fe1dc127a2ffa8de3348b3c1856a429bf97e7e31c2e5bd66",
                    "0x11839296a789a3bc0045c8a5fb42c7d1bd998f54449579b446817afbd17273e662c97ee7299"
                    "5ef42640c550b9013fad0761353c7086a272c24088be94769fd16650",
                    "0x1fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffa51868783bf2"
                    "f966b7fcc0148f709a5d03bb5c9b8899c47aebb6fb71e91386409",
                    521));
    return reg;
}

}  // namespace

const CurveParams& registry_get(const std::string& name) {
    static const std::map<std::string, CurveParams> reg = build_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw UnknownCurveError(name);
    return it->second;
}

const std::vector<std::string>& registry_names() {
    static const std::vector<std::string> names = {"secp256k1", "p256", "p384", "p521",
                                                   "eccfrog522pp"};
    return names;
}

}  // namespace frog
