#include "btx/sequence.hpp"

#include "btx/error.hpp"
#include "btx/text.hpp"
#include "btx/transform.hpp"

namespace btx {

namespace seq {

Rational fibolike_value(const FiboLike& f, long index) {
  if (index >= 0) {
    Rational prev = f.a;
    Rational cur = f.b;
    if (index == 0) return prev;
    for (long i = 1; i < index; ++i) {
      Rational next = f.c * prev + cur;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // Walk down from (F_1, F_0): F_{i} = (F_{i+2} - F_{i+1}) / c.
  Rational upper = f.b;
  Rational lower = f.a;
  for (long i = -1; i >= index; --i) {
    Rational next = (upper - lower) / f.c;
    upper = std::move(lower);
    lower = std::move(next);
  }
  return lower;
}

}  // namespace seq

namespace {

void require_nonnegative(long v, const char* what) {
  if (v < 0) throw ConfigError(std::string(what) + " must be nonnegative");
}

struct Validator {
  void operator()(const seq::UserTable&) const {}
  void operator()(const seq::Harmonic&) const {}
  void operator()(const seq::GenHarmonic& g) const {
    if (g.r < 1) throw ConfigError("genharmonic: r must be a positive integer");
    if (g.x.is_integer() && g.x.sign() < 0) {
      throw DomainError("genharmonic: x = " + g.x.str() + " is a pole");
    }
  }
  void operator()(const seq::FiboLike& f) const {
    if (f.c.is_zero()) throw DomainError("fibolike: c must be nonzero");
    require_nonnegative(f.r, "fibolike: r");
  }
  void operator()(const seq::BinomAlt& b) const { require_nonnegative(b.r, "binomalt: r"); }
  void operator()(const seq::FussCatalan& f) const {
    require_nonnegative(f.m, "fusscatalan: m");
    require_nonnegative(f.s, "fusscatalan: s");
  }
  void operator()(const seq::QInt& q) const {
    if (q.p == Rational(1)) throw DomainError("qint: p must differ from 1");
    require_nonnegative(q.r, "qint: r");
  }
  void operator()(const seq::BellAlt&) const {}
  void operator()(const seq::GeomAlt&) const {}
  void operator()(const seq::Laguerre& l) const { require_nonnegative(l.r, "laguerre: r"); }
  void operator()(const seq::Meixner& m) const {
    if (m.beta.is_zero()) throw DomainError("meixner: beta must be nonzero");
    require_nonnegative(m.r, "meixner: r");
  }
  void operator()(const seq::AppellScaled& a) const {
    if (a.lambda.is_zero()) throw DomainError("appellscaled: lambda must be nonzero");
  }
  void operator()(const seq::TransformOf& t) const {
    if (!t.inner) throw ConfigError("transformof: missing inner sequence");
  }
};

struct TermFn {
  long n;
  Rational operator()(const seq::UserTable& u) const {
    if (static_cast<std::size_t>(n) >= u.terms.size()) {
      throw ConfigError("usertable has " + std::to_string(u.terms.size()) + " terms, index " +
                        std::to_string(n) + " requested");
    }
    return u.terms[n];
  }
  Rational operator()(const seq::Harmonic&) const { return harmonic(n); }
  Rational operator()(const seq::GenHarmonic& g) const { return gen_harmonic(n, g.r, g.x); }
  Rational operator()(const seq::FiboLike& f) const { return seq::fibolike_value(f, n + f.r); }
  Rational operator()(const seq::BinomAlt& b) const { return sign_power(n) * binomial(b.alpha, n + b.r); }
  Rational operator()(const seq::FussCatalan& f) const { return fuss_catalan(f.m, f.s, n); }
  Rational operator()(const seq::QInt& q) const { return qint(n + q.r, q.p); }
  Rational operator()(const seq::BellAlt& b) const { return sign_power(n) * b.x * bell_poly(n, b.x); }
  Rational operator()(const seq::GeomAlt& g) const { return sign_power(n) * g.x * geometric_poly(n, g.x); }
  Rational operator()(const seq::Laguerre& l) const {
    return l.mode == seq::LaguerreMode::degree ? laguerre(n + l.r, l.alpha, l.x)
                                               : laguerre(l.r, l.alpha + Rational(n), l.x);
  }
  Rational operator()(const seq::Meixner& m) const { return meixner(n + m.r, m.x, m.alpha, m.beta, m.definition); }
  Rational operator()(const seq::AppellScaled& a) const {
    return a.lambda.pow(n) * appell_value(a.family, static_cast<std::size_t>(n), a.x);
  }
  Rational operator()(const seq::TransformOf& t) const {
    return bernoulli_sum(t.inner->terms(n + 1), n, t.at);
  }
};

std::string laguerre_mode_name(seq::LaguerreMode m) { return m == seq::LaguerreMode::degree ? "degree" : "order"; }

std::string meixner_def_name(MeixnerDefinition d) {
  return d == MeixnerDefinition::pochhammer ? "pochhammer" : "hypergeometric";
}

}  // namespace

SequenceSpec::SequenceSpec(Variant v) : v_(std::move(v)) {
  std::visit(Validator{}, v_);
  if (depth() > max_transform_depth) {
    throw ConfigError("transformof nesting exceeds depth " + std::to_string(max_transform_depth));
  }
}

int SequenceSpec::depth() const {
  if (const auto* t = std::get_if<seq::TransformOf>(&v_)) return 1 + t->inner->depth();
  return 0;
}

std::string SequenceSpec::family() const {
  static const char* const names[] = {"usertable", "harmonic",  "genharmonic", "fibolike", "binomalt",
                                      "fusscatalan", "qint",    "bellalt",     "geomalt",  "laguerre",
                                      "meixner",   "appellscaled", "transformof"};
  return names[v_.index()];
}

std::string SequenceSpec::str() const {
  struct Printer {
    std::string operator()(const seq::UserTable& u) const {
      std::string out = "usertable:";
      for (std::size_t i = 0; i < u.terms.size(); ++i) out += (i ? "," : "") + u.terms[i].str();
      return out;
    }
    std::string operator()(const seq::Harmonic&) const { return "harmonic"; }
    std::string operator()(const seq::GenHarmonic& g) const {
      return "genharmonic:r=" + std::to_string(g.r) + ",x=" + g.x.str();
    }
    std::string operator()(const seq::FiboLike& f) const {
      return "fibolike:a=" + f.a.str() + ",b=" + f.b.str() + ",c=" + f.c.str() + ",r=" + std::to_string(f.r);
    }
    std::string operator()(const seq::BinomAlt& b) const {
      return "binomalt:alpha=" + b.alpha.str() + ",r=" + std::to_string(b.r);
    }
    std::string operator()(const seq::FussCatalan& f) const {
      return "fusscatalan:m=" + std::to_string(f.m) + ",s=" + std::to_string(f.s);
    }
    std::string operator()(const seq::QInt& q) const { return "qint:p=" + q.p.str() + ",r=" + std::to_string(q.r); }
    std::string operator()(const seq::BellAlt& b) const { return "bellalt:x=" + b.x.str(); }
    std::string operator()(const seq::GeomAlt& g) const { return "geomalt:x=" + g.x.str(); }
    std::string operator()(const seq::Laguerre& l) const {
      return "laguerre:alpha=" + l.alpha.str() + ",x=" + l.x.str() + ",mode=" + laguerre_mode_name(l.mode) +
             ",r=" + std::to_string(l.r);
    }
    std::string operator()(const seq::Meixner& m) const {
      std::string out = "meixner:x=" + m.x.str() + ",alpha=" + m.alpha.str() + ",beta=" + m.beta.str() +
                        ",r=" + std::to_string(m.r);
      if (m.definition != MeixnerDefinition::pochhammer) out += ",def=" + meixner_def_name(m.definition);
      return out;
    }
    std::string operator()(const seq::AppellScaled& a) const {
      return "appellscaled:lambda=" + a.lambda.str() + ",x=" + a.x.str() + ",family=[" + a.family.str() + "]";
    }
    std::string operator()(const seq::TransformOf& t) const {
      return "transformof:at=" + t.at.str() + ",inner=[" + t.inner->str() + "]";
    }
  };
  return std::visit(Printer{}, v_);
}

SequenceSpec SequenceSpec::parse(std::string_view text) {
  const std::string body = unbracket(text);
  const auto colon = body.find(':');
  const std::string family(trim(std::string_view(body).substr(0, colon)));
  const std::string rest = colon == std::string::npos ? std::string() : body.substr(colon + 1);

  if (family == "usertable") {
    seq::UserTable u;
    for (const auto& piece : split_top_level(rest, ',')) {
      if (!piece.empty()) u.terms.push_back(Rational::parse(piece));
    }
    if (u.terms.empty()) throw ConfigError("usertable needs at least one term");
    return SequenceSpec(std::move(u));
  }

  Params p(family, rest);
  auto done = [&](Variant v) {
    p.finish();
    return SequenceSpec(std::move(v));
  };
  if (family == "harmonic") return done(seq::Harmonic{});
  if (family == "genharmonic") return done(seq::GenHarmonic{p.integer("r", 1), p.rational("x", Rational(0))});
  if (family == "fibonacci") return done(seq::FiboLike{0, 1, 1, p.integer("r", 0)});
  if (family == "lucas") return done(seq::FiboLike{2, 1, 1, p.integer("r", 0)});
  if (family == "fibolike") {
    return done(seq::FiboLike{p.rational("a"), p.rational("b"), p.rational("c", Rational(1)), p.integer("r", 0)});
  }
  if (family == "binomalt") return done(seq::BinomAlt{p.rational("alpha"), p.integer("r", 0)});
  if (family == "fusscatalan") return done(seq::FussCatalan{p.integer("m"), p.integer("s")});
  if (family == "qint") return done(seq::QInt{p.rational("p"), p.integer("r", 0)});
  if (family == "bellalt") return done(seq::BellAlt{p.rational("x")});
  if (family == "geomalt") return done(seq::GeomAlt{p.rational("x")});
  if (family == "laguerre") {
    seq::Laguerre l{p.rational("alpha"), p.rational("x"), seq::LaguerreMode::degree, 0};
    const std::string mode = p.text("mode").value_or("degree");
    if (mode == "order") {
      l.mode = seq::LaguerreMode::order;
    } else if (mode != "degree") {
      throw ConfigError("laguerre: mode must be degree or order");
    }
    l.r = p.integer("r", 0);
    return done(std::move(l));
  }
  if (family == "meixner") {
    seq::Meixner m{p.rational("x"), p.rational("alpha"), p.rational("beta"), p.integer("r", 0),
                   MeixnerDefinition::pochhammer};
    const std::string def = p.text("def").value_or("pochhammer");
    if (def == "hypergeometric") {
      m.definition = MeixnerDefinition::hypergeometric;
    } else if (def != "pochhammer") {
      throw ConfigError("meixner: def must be pochhammer or hypergeometric");
    }
    return done(std::move(m));
  }
  if (family == "appellscaled") {
    const auto fam = p.text("family");
    if (!fam) throw ConfigError("appellscaled: missing parameter 'family'");
    return done(seq::AppellScaled{AppellSpec::parse(*fam), p.rational("lambda"), p.rational("x")});
  }
  if (family == "transformof") {
    const auto inner = p.text("inner");
    if (!inner) throw ConfigError("transformof: missing parameter 'inner'");
    auto inner_spec = std::make_shared<const SequenceSpec>(parse(*inner));
    return done(seq::TransformOf{std::move(inner_spec), p.rational("at")});
  }
  throw ConfigError("unknown sequence family '" + family + "'");
}

Rational SequenceSpec::term(long n) const {
  if (n < 0) throw DomainError("sequence index must be nonnegative");
  return std::visit(TermFn{n}, v_);
}

std::vector<Rational> SequenceSpec::terms(long count) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
  if (std::holds_alternative<seq::Harmonic>(v_)) {
    Rational h;
    for (long n = 0; n < count; ++n) {
      if (n > 0) h += Rational(1, n);
      out.push_back(h);
    }
    return out;
  }
  if (const auto* t = std::get_if<seq::TransformOf>(&v_)) {
    const auto inner = t->inner->terms(count);
    for (long n = 0; n < count; ++n) out.push_back(bernoulli_sum(inner, n, t->at));
    return out;
  }
  for (long n = 0; n < count; ++n) out.push_back(term(n));
  return out;
}

Rational backward_difference(const std::vector<Rational>& a, long n, long j) {
  if (j < 0 || j > n) throw DomainError("backward difference needs 0 <= j <= n");
  if (static_cast<std::size_t>(n) >= a.size()) throw DomainError("backward difference needs terms up to a_n");
  Rational sum;
  for (long l = 0; l <= j; ++l) sum += sign_power(l) * binomial(j, l) * a[n - l];
  return sum;
}

DiffTable diff_table(const std::vector<Rational>& a, long n) {
  DiffTable t;
  t.n = n;
  t.values.reserve(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) t.values.push_back(backward_difference(a, n, j));
  return t;
}

DiffTable diff_table(const SequenceSpec& spec, long n) {
  if (n < 0) throw DomainError("difference table index must be nonnegative");
  return diff_table(spec.terms(n + 1), n);
}

Rational dual_diff(const std::vector<Rational>& a, long j) {
  if (j < 0) throw DomainError("dual difference index must be nonnegative");
  if (static_cast<std::size_t>(j) >= a.size()) throw DomainError("dual difference needs terms up to a_j");
  Rational sum;
  for (long l = 0; l <= j; ++l) sum += sign_power(l) * binomial(j, l) * a[l];
  return sum;
}

Rational dual_diff(const SequenceSpec& spec, long j) {
  if (j < 0) throw DomainError("dual difference index must be nonnegative");
  return dual_diff(spec.terms(j + 1), j);
}

std::vector<SequenceSpec> sequence_catalog() {
  static const char* const specs[] = {
      "harmonic",
      "genharmonic:r=2,x=1/2",
      "fibolike:a=2,b=-1/3,c=3/2,r=1",
      "binomalt:alpha=7/2,r=1",
      "fusscatalan:m=10,s=2",
      "qint:p=2/3,r=1",
      "bellalt:x=3/2",
      "geomalt:x=-1/3",
      "laguerre:alpha=1/2,x=2/3,mode=degree,r=1",
      "laguerre:alpha=1/2,x=2/3,mode=order,r=3",
      "meixner:x=1/2,alpha=5/2,beta=1/3,r=0",
      "appellscaled:lambda=2,x=1/3,family=[bernoulli:a=2]",
      "transformof:at=1/3,inner=[harmonic]",
  };
  std::vector<SequenceSpec> out;
  for (const char* s : specs) out.push_back(SequenceSpec::parse(s));
  return out;
}

}  // namespace btx
