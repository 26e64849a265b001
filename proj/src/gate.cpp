#include "palg/gate.hpp"

#include <numeric>
#include <sstream>

namespace palg {

SummandDescriptor SummandDescriptor::lens(long order) {
  SummandDescriptor s;
  s.kind = SummandKind::Lens;
  s.order = order;
  s.validate();
  return s;
}

SummandDescriptor SummandDescriptor::prism(long m, long n) {
  SummandDescriptor s;
  s.kind = SummandKind::Prism;
  s.m = m;
  s.n = n;
  s.validate();
  return s;
}

SummandDescriptor SummandDescriptor::type_t(long m) {
  SummandDescriptor s;
  s.kind = SummandKind::TypeT;
  s.m = m;
  s.validate();
  return s;
}

SummandDescriptor SummandDescriptor::type_o(long m) {
  SummandDescriptor s;
  s.kind = SummandKind::TypeO;
  s.m = m;
  s.validate();
  return s;
}

SummandDescriptor SummandDescriptor::type_i(long m) {
  SummandDescriptor s;
  s.kind = SummandKind::TypeI;
  s.m = m;
  s.validate();
  return s;
}

SummandDescriptor SummandDescriptor::s1xs2() {
  SummandDescriptor s;
  s.kind = SummandKind::S1xS2;
  return s;
}

SummandDescriptor SummandDescriptor::aspherical() {
  SummandDescriptor s;
  s.kind = SummandKind::Aspherical;
  return s;
}

void SummandDescriptor::validate() const {
  switch (kind) {
    case SummandKind::Lens:
      if (order < 2) throw std::invalid_argument("lens order must be >= 2");
      break;
    case SummandKind::Prism:
      if (m < 1 || n < 2) throw std::invalid_argument("prism needs m >= 1, n >= 2");
      if (std::gcd(m, n) != 1) throw std::invalid_argument("prism needs gcd(m, n) = 1");
      break;
    case SummandKind::TypeT:
    case SummandKind::TypeO:
      if (m < 1 || std::gcd(m, 6L) != 1)
        throw std::invalid_argument("type T/O needs m >= 1 with gcd(m, 6) = 1");
      break;
    case SummandKind::TypeI:
      if (m < 1 || std::gcd(m, 30L) != 1)
        throw std::invalid_argument("type I needs m >= 1 with gcd(m, 30) = 1");
      break;
    default:
      break;
  }
}

SummandDescriptor SummandDescriptor::parse(const std::string& text) {
  auto args = [&](const std::string& head) -> std::optional<std::vector<long>> {
    if (text.size() < head.size() + 2 || text.compare(0, head.size(), head) != 0) return std::nullopt;
    if (text[head.size()] != '(' || text.back() != ')') return std::nullopt;
    std::string inner = text.substr(head.size() + 1, text.size() - head.size() - 2);
    std::vector<long> vals;
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) vals.push_back(std::stol(tok));
    return vals;
  };
  if (text == "s1xs2" || text == "S1xS2") return s1xs2();
  if (text == "aspherical") return aspherical();
  if (auto v = args("lens"); v && v->size() == 1) return lens((*v)[0]);
  if (auto v = args("prism"); v && v->size() == 2) return prism((*v)[0], (*v)[1]);
  if (auto v = args("typeT"); v && v->size() == 1) return type_t((*v)[0]);
  if (auto v = args("typeO"); v && v->size() == 1) return type_o((*v)[0]);
  if (auto v = args("typeI"); v && v->size() == 1) return type_i((*v)[0]);
  throw std::invalid_argument("unparseable summand descriptor '" + text + "'");
}

std::string SummandDescriptor::str() const {
  switch (kind) {
    case SummandKind::Lens: return "lens(" + std::to_string(order) + ")";
    case SummandKind::Prism:
      return "prism(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case SummandKind::TypeT: return "typeT(" + std::to_string(m) + ")";
    case SummandKind::TypeO: return "typeO(" + std::to_string(m) + ")";
    case SummandKind::TypeI: return "typeI(" + std::to_string(m) + ")";
    case SummandKind::S1xS2: return "s1xs2";
    case SummandKind::Aspherical: return "aspherical";
    case SummandKind::Other: return "other";
  }
  return "?";
}

std::string GateVerdict::str() const {
  std::ostringstream os;
  os << (admissible ? "admissible" : "inadmissible") << "\n";
  for (const auto& t : trace)
    os << "  " << t.rule_id << " [" << t.citation << "] " << t.message << "\n";
  return os.str();
}

namespace {

const char* kCiteLambda = "surgery homology: integer slope k gives H1 = Z_k";
const char* kCiteHowie = "Howie: an integer surgery has at most three prime summands";
const char* kCiteAspherical = "cyclic quasi-dilation obstruction to aspherical summands";
const char* kCiteTOI = "integral group-ring central units of A4, S4, A5 are trivial";
const char* kCiteLens = "torsion-unit orders in the degree-zero algebra divide k";
const char* kCitePrism = "odd-dihedral centers have no torsion unit";
const char* kCiteCatalog = "spherical space form catalog";
const char* kCiteGL = "Gordon-Luecke: a reducible integer surgery is a sum of two lens spaces";
const char* kCiteFP = "free-product group algebras have trivial center";
const char* kCiteKMOS = "Kronheimer-Mrowka-Ozsvath-Szabo: lens-space surgery forces the unknot";
const char* kCiteHKMP = "a surgery with both handles knotted is irreducible and toroidal";
const char* kCiteCover = "cyclic quasi-dilation domination constraint";

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool classify_into(const SummandDescriptor& s, long k, std::vector<TraceEntry>& trace) {
  s.validate();
  std::string who = s.str();
  switch (s.kind) {
    case SummandKind::Aspherical:
      trace.push_back({"rule.aspherical.no-kpi1", kCiteAspherical,
                       who + ": aspherical prime summands are excluded"});
      return false;
    case SummandKind::TypeT:
    case SummandKind::TypeO:
    case SummandKind::TypeI:
      trace.push_back({"rule.toi.no-tetra-octa-icosa", kCiteTOI,
                       who + ": spherical summands of type T, O or I are excluded"});
      return false;
    case SummandKind::Lens: {
      for (long p : prime_factors(s.order))
        if (k % p != 0) {
          trace.push_back({"rule.lensprism.prime-divides-k", kCiteLens,
                           who + ": prime " + std::to_string(p) + " divides the lens order but not k=" +
                               std::to_string(k)});
          return false;
        }
      trace.push_back({"rule.lensprism.prime-divides-k", kCiteLens,
                       who + ": every prime factor of the order divides k"});
      return true;
    }
    case SummandKind::Prism: {
      if (s.n % 2 != 0) {
        trace.push_back({"rule.lensprism.prism-n-even", kCitePrism,
                         who + ": dihedral quotient parameter n = " + std::to_string(s.n) +
                             " is odd"});
        return false;
      }
      trace.push_back({"rule.lensprism.prism-n-even", kCitePrism,
                       who + ": dihedral quotient parameter is even"});
      return true;
    }
    case SummandKind::S1xS2:
      trace.push_back({"rule.classification.s1xs2-allowed", kCiteCatalog,
                       who + ": allowed at the summand level"});
      return true;
    case SummandKind::Other:
      trace.push_back({"rule.classification.not-in-catalog", kCiteCatalog,
                       who + ": not in the admissible summand catalog"});
      return false;
  }
  return false;
}

std::string factors_str(const std::vector<BigInt>& f) {
  if (f.empty()) return "trivial";
  std::ostringstream os;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) os << " + ";
    if (f[i] == 0) os << "Z";
    else os << "Z" << f[i];
  }
  return os.str();
}

}  // namespace

GateVerdict classify_summand(const SummandDescriptor& s, long k) {
  if (k < 1) throw std::invalid_argument("classify_summand: k must be >= 1");
  GateVerdict v;
  v.admissible = classify_into(s, k, v.trace);
  return v;
}

std::vector<BigInt> candidate_h1(const std::vector<SummandDescriptor>& candidate) {
  // relation matrix of the direct sum; one block per summand
  std::vector<std::vector<BigInt>> blocks;  // each row vector, square blocks
  size_t total = 0;
  for (const auto& s : candidate) {
    switch (s.kind) {
      case SummandKind::Lens:
        blocks.push_back({BigInt(s.order)});
        total += 1;
        break;
      case SummandKind::Prism:
        blocks.push_back({BigInt(0), BigInt(2), BigInt(2 * s.m), BigInt(-s.n)});
        total += 2;
        break;
      case SummandKind::S1xS2:
        blocks.push_back({BigInt(0)});
        total += 1;
        break;
      default:
        throw std::invalid_argument("candidate_h1: no homology model for " + s.str());
    }
  }
  IntMatrix m(total, total);
  size_t off = 0;
  for (const auto& b : blocks) {
    size_t bs = b.size() == 1 ? 1 : 2;
    for (size_t i = 0; i < bs; ++i)
      for (size_t j = 0; j < bs; ++j) m.at(off + i, off + j) = b[i * bs + j];
    off += bs;
  }
  SmithResult snf = smith_normal_form(m);
  std::vector<BigInt> nonzero = snf.invariant_factors();
  std::vector<BigInt> out;
  for (const auto& d : nonzero)
    if (d != 1) out.push_back(d);
  for (size_t i = nonzero.size(); i < total; ++i) out.push_back(0);
  return out;
}

GateVerdict surgery_gate(long k, KnotConfig knots,
                         const std::vector<SummandDescriptor>& candidate) {
  if (k < 1) throw std::invalid_argument("surgery_gate: k must be >= 1");
  if (candidate.empty()) throw std::invalid_argument("surgery_gate: empty candidate");
  GateVerdict v;

  if (knots == KnotConfig::BothNontrivial) {
    v.trace.push_back({"rule.hkmp.irreducible-toroidal", kCiteHKMP,
                       "both knots nontrivial: the surgery is irreducible and contains an "
                       "incompressible torus"});
    v.trace.push_back({"rule.cover.domination", kCiteCover,
                       "the surgery is finitely covered by S1 x Sigma_g or # S1 x S2"});
    v.trace.push_back({"rule.aspherical.no-kpi1", kCiteAspherical,
                       "the aspherical branch is excluded"});
    v.trace.push_back({"rule.lambda.h1-is-zk", kCiteLambda,
                       "H1 = Z_k with irreducibility forces a spherical manifold"});
    v.trace.push_back({"rule.surgery.spherical-toroidal-contradiction", kCiteHKMP,
                       "spherical manifolds contain no incompressible torus: no candidate "
                       "survives"});
    v.admissible = false;
    return v;
  }

  v.trace.push_back({"rule.lambda.h1-is-zk", kCiteLambda,
                     "slope " + std::to_string(k) + " surgery on one nontrivial knot has H1 = Z" +
                         std::to_string(k)});

  if (candidate.size() > 3) {
    v.trace.push_back({"rule.howie.at-most-three", kCiteHowie,
                       std::to_string(candidate.size()) + " summands exceed Howie's bound"});
    v.admissible = false;
    return v;
  }
  if (candidate.size() == 3) {
    v.trace.push_back({"rule.howie.at-most-three", kCiteHowie,
                       "three summands would force an integral homology sphere summand"});
    v.trace.push_back({"rule.howie.three-forces-homology-sphere", kCiteTOI,
                       "an integral homology sphere summand is excluded by the spherical-type "
                       "rules: rejected"});
    v.admissible = false;
    return v;
  }

  bool all_pass = true;
  for (const auto& s : candidate)
    if (!classify_into(s, k, v.trace)) all_pass = false;
  if (!all_pass) {
    v.admissible = false;
    return v;
  }

  for (const auto& s : candidate)
    if (s.kind == SummandKind::S1xS2)
      v.trace.push_back({"rule.surgery.no-s1xs2", kCiteLambda,
                         "an S1 x S2 summand makes H1 infinite, impossible for k >= 1"});

  std::vector<BigInt> h1 = candidate_h1(candidate);
  std::vector<BigInt> want;
  if (k > 1) want.push_back(BigInt(k));
  if (h1 != want) {
    bool cyclic = h1.size() <= 1 && (h1.empty() || h1[0] != 0);
    std::string msg = "H1 = " + factors_str(h1) + (cyclic ? "" : " is not cyclic") +
                      ", but the surgery forces Z" + std::to_string(k);
    v.trace.push_back({"rule.lambda.h1-mismatch", kCiteLambda, msg});
    v.admissible = false;
    return v;
  }
  v.trace.push_back({"rule.lambda.h1-is-zk", kCiteLambda,
                     "candidate H1 = " + factors_str(h1) + " matches Z" + std::to_string(k)});

  if (candidate.size() == 2) {
    bool both_lens = candidate[0].kind == SummandKind::Lens &&
                     candidate[1].kind == SummandKind::Lens;
    if (!both_lens) {
      v.trace.push_back({"rule.gordonluecke.two-lens-only", kCiteGL,
                         "a reducible surgery must be a connected sum of two lens spaces"});
      v.admissible = false;
      return v;
    }
    v.trace.push_back({"rule.gordonluecke.two-lens-only", kCiteGL,
                       "two-summand case: both summands are lens spaces, as Gordon-Luecke "
                       "requires"});
    v.trace.push_back({"rule.freeproduct.center-trivial", kCiteFP,
                       "the free product Z_m * Z_n has a group algebra with trivial center, "
                       "contradicting the transported central unit: rejected"});
    v.admissible = false;
    return v;
  }

  // single summand; prisms and S1xS2 cannot reach here (H1 filter)
  if (candidate[0].kind == SummandKind::Lens) {
    v.trace.push_back({"rule.kmos.forces-unknot", kCiteKMOS, "forces unknot (KMOS axiom)"});
    v.admissible = true;
    return v;
  }
  v.trace.push_back({"rule.surgery.unhandled", kCiteCatalog,
                     "no admissible branch for " + candidate[0].str()});
  v.admissible = false;
  return v;
}

}  // namespace palg
