#include "cqe/kernel.hpp"

namespace cqe {

namespace {

class Substituter {
 public:
  Substituter(const Kernel& k, std::vector<const RegistryEntry*>* used) : k_(k), used_(used) {}

  Term go(const Bindings& theta, const Term& t) {
    if (theta.empty()) return t;
    switch (t.kind()) {
      case Term::Kind::Var:
        for (const auto& [x, v] : theta)
          if (x == t) return v;
        return t;
      case Term::Kind::Const: return t;
      case Term::Kind::Comb: {
        Term f = go(theta, t.op());
        Term a = go(theta, t.arg());
        if (f.identity() == t.op().identity() && a.identity() == t.arg().identity()) return t;
        return Term::comb(f, a);
      }
      case Term::Kind::Abs: return abs(theta, t);
      case Term::Kind::Quote:
        if (!t.contains_quasiquote()) return t;
        return Term::quote(in_quote(theta, t.body()));
      case Term::Kind::Hole: return Term::hole(go(theta, t.content()), t.annotation());
      case Term::Kind::Eval: return suspend(theta, t);
    }
    return t;
  }

 private:
  // Registry-backed side condition. Entry hypotheses must not mention a
  // variable bound at this point, since the entry is only known for the
  // free reading of those hypotheses.
  bool entry(const Term& x, const Term& t) {
    const RegistryEntry* e = k_.find_not_effective(x, t);
    if (!e) return false;
    for (const auto& h : e->theorem.hypotheses()) {
      if (!h.eval_free()) return false;
      for (const auto& b : bound_)
        if (is_free_in(b, h)) return false;
    }
    if (used_) used_->push_back(e);
    return true;
  }

  Term abs(const Bindings& theta, const Term& t) {
    Term y = t.binder();
    Term s = t.body();
    Bindings keep;
    bool rename = false;
    bool all_eval_free = true;
    std::vector<SideCondition> blocked;
    for (const auto& [x, v] : theta) {
      if (x == y) continue;
      if (s.eval_free() && !is_free_in(x, s)) continue;
      if (v.eval_free() && !is_free_in(y, v)) {
        keep.emplace_back(x, v);
      } else if (entry(y, v) || entry(x, s)) {
        keep.emplace_back(x, v);
        if (!v.eval_free()) all_eval_free = false;
      } else if (s.eval_free() && v.eval_free()) {
        keep.emplace_back(x, v);
        rename = true;
      } else {
        blocked.push_back({y, v});
        blocked.push_back({x, s});
      }
    }
    if (rename && !all_eval_free)
      for (const auto& [x, v] : keep)
        if (!v.eval_free()) blocked.push_back({y, v});
    if (!blocked.empty()) {
      std::string what = "substitution under binder " + y.name() + " needs a side condition";
      throw SubstitutionBlocked(std::move(blocked), what);
    }
    if (keep.empty()) return t;
    if (rename) {
      TermSet avoid = all_variables(s);
      for (const auto& [x, v] : keep) {
        avoid.insert(x);
        for (const auto& w : all_variables(v)) avoid.insert(w);
      }
      Term z = fresh_variant(y, avoid);
      Substituter plain(k_, nullptr);
      s = plain.go({{y, z}}, s);
      y = z;
    }
    bound_.push_back(y);
    Term body = go(keep, s);
    bound_.pop_back();
    if (y.identity() == t.binder().identity() && body.identity() == t.body().identity())
      return t;
    return Term::abs(y, body);
  }

  Term in_quote(const Bindings& theta, const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Comb: return Term::comb(in_quote(theta, t.op()), in_quote(theta, t.arg()));
      case Term::Kind::Abs: return Term::abs(t.binder(), in_quote(theta, t.body()));
      case Term::Kind::Hole: return Term::hole(go(theta, t.content()), t.annotation());
      default: return t;
    }
  }

  // (\x1. (\x2. ... eval ...) t2) t1; only sound if no x_i is effective in a
  // later t_j.
  Term suspend(const Bindings& theta, const Term& t) {
    std::vector<SideCondition> blocked;
    for (std::size_t i = 0; i < theta.size(); ++i)
      for (std::size_t j = i + 1; j < theta.size(); ++j) {
        const Term& xi = theta[i].first;
        const Term& tj = theta[j].second;
        if (tj.eval_free() && !is_free_in(xi, tj)) continue;
        if (entry(xi, tj)) continue;
        blocked.push_back({xi, tj});
      }
    if (!blocked.empty())
      throw SubstitutionBlocked(std::move(blocked),
                                "simultaneous substitution into an evaluation");
    Term r = t;
    for (std::size_t i = theta.size(); i-- > 0;)
      r = Term::comb(Term::abs(theta[i].first, r), theta[i].second);
    return r;
  }

  const Kernel& k_;
  std::vector<const RegistryEntry*>* used_;
  std::vector<Term> bound_;
};

// Variables occurring free, reading evaluation contents as ordinary terms.
void loose_frees(const Term& t, TermSet& bound, TermSet& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (!bound.count(t)) out.insert(t);
      break;
    case Term::Kind::Const: break;
    case Term::Kind::Comb:
      loose_frees(t.op(), bound, out);
      loose_frees(t.arg(), bound, out);
      break;
    case Term::Kind::Abs: {
      bool added = bound.insert(t.binder()).second;
      loose_frees(t.body(), bound, out);
      if (added) bound.erase(t.binder());
      break;
    }
    case Term::Kind::Quote: {
      struct Walk {
        TermSet& bound;
        TermSet& out;
        void operator()(const Term& u) const {
          if (u.is_hole()) loose_frees(u.content(), bound, out);
          else if (u.is_comb()) { (*this)(u.op()); (*this)(u.arg()); }
          else if (u.is_abs()) (*this)(u.body());
        }
      };
      Walk{bound, out}(t.body());
      break;
    }
    case Term::Kind::Hole:
    case Term::Kind::Eval: loose_frees(t.content(), bound, out); break;
  }
}

bool mentions(const Type& ty, const TypeSubst& theta) {
  std::vector<std::string> vs;
  collect_type_vars(ty, vs);
  for (const auto& v : vs)
    if (theta.count(v)) return true;
  return false;
}

// Literal part of a quotation body (outside holes).
bool literal_mentions(const Term& t, const TypeSubst& theta) {
  switch (t.kind()) {
    case Term::Kind::Hole: return mentions(t.annotation(), theta);
    case Term::Kind::Comb: return literal_mentions(t.op(), theta) || literal_mentions(t.arg(), theta);
    case Term::Kind::Abs:
      return mentions(t.binder().type(), theta) || literal_mentions(t.body(), theta);
    case Term::Kind::Quote: return literal_mentions(t.body(), theta);
    default: return mentions(t.type(), theta);
  }
}

class TypeInstantiator {
 public:
  TypeInstantiator(const Kernel& k, const TypeSubst& theta) : k_(k), theta_(theta) {}

  Term go(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var: return Term::var(t.name(), type_subst(theta_, t.type()));
      case Term::Kind::Const: return Term::constant(t.name(), type_subst(theta_, t.type()));
      case Term::Kind::Comb: return Term::comb(go(t.op()), go(t.arg()));
      case Term::Kind::Abs: return abs(t);
      case Term::Kind::Quote:
        if (literal_mentions(t.body(), theta_))
          fail(ErrorKind::QuotationTypePolymorphism,
               "type instantiation would change a quoted type");
        if (!t.contains_quasiquote()) return t;
        return Term::quote(in_quote(t.body()));
      case Term::Kind::Hole: return Term::hole(go(t.content()), type_subst(theta_, t.annotation()));
      case Term::Kind::Eval: return Term::eval(go(t.content()), type_subst(theta_, t.annotation()));
    }
    return t;
  }

 private:
  Term in_quote(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Comb: return Term::comb(in_quote(t.op()), in_quote(t.arg()));
      case Term::Kind::Abs: return Term::abs(t.binder(), in_quote(t.body()));
      case Term::Kind::Hole: return Term::hole(go(t.content()), t.annotation());
      default: return t;
    }
  }

  Term abs(const Term& t) {
    Term v = t.binder();
    Term b = t.body();
    Term v2 = go(v);
    TermSet bound, fr;
    loose_frees(b, bound, fr);
    bool capture = false;
    for (const auto& w : fr)
      if (w != v && w.name() == v.name() && type_subst(theta_, w.type()) == v2.type())
        capture = true;
    if (capture) {
      if (!b.eval_free())
        fail(ErrorKind::SubstitutionBlocked,
             "type instantiation would capture " + v.name() + " under an evaluation");
      Term z = fresh_variant(v, all_variables(b));
      b = k_.vsubst({{v, z}}, b);
      v = z;
      v2 = go(v);
    }
    return Term::abs(v2, go(b));
  }

  const Kernel& k_;
  const TypeSubst& theta_;
};

}  // namespace

Term Kernel::vsubst(const Bindings& theta, const Term& t,
                    std::vector<const RegistryEntry*>* used) const {
  Bindings live;
  for (const auto& [x, v] : theta) {
    if (!x.is_var()) fail(ErrorKind::NotAVariable, "substitution target must be a variable");
    if (x.type() != v.type())
      fail(ErrorKind::TypeMismatch, "substitution for " + x.name() + " changes its type");
    if (v.has_stray_holes())
      fail(ErrorKind::HoleOutsideQuotation, "substituted term contains a stray hole");
    for (const auto& [y, w] : live)
      if (y == x) fail(ErrorKind::RuleShape, "variable " + x.name() + " bound twice");
    if (x != v) live.emplace_back(x, v);
  }
  return Substituter(*this, used).go(live, t);
}

Term Kernel::inst_type(const TypeSubst& theta, const Term& t) const {
  if (theta.empty()) return t;
  return TypeInstantiator(*this, theta).go(t);
}

}  // namespace cqe
