#include "nsym/nsym.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "json.hpp"
#include "nsym/diagram.hpp"
#include "nsym/expansions.hpp"
#include "nsym/ribbon.hpp"
#include "nsym/serialize.hpp"
#include "nsym/thc.hpp"
#include "nsym/verify.hpp"

struct nsym_expr {
  nsym::BasisExpr value;
  std::vector<std::pair<nsym::Coeff, const nsym::Composition*>> flat;

  explicit nsym_expr(nsym::BasisExpr v) : value(std::move(v)) {
    for (const auto& [index, coeff] : value.terms()) flat.emplace_back(coeff, &index);
  }
};

struct nsym_covering_stream {
  nsym::CoveringStream stream;
};

namespace {

thread_local std::string g_last_error;

nsym_status to_status(nsym::ErrorCode code) {
  switch (code) {
    case nsym::ErrorCode::kInvalidArgument: return NSYM_INVALID_ARGUMENT;
    case nsym::ErrorCode::kBoundExceeded: return NSYM_BOUND;
    case nsym::ErrorCode::kOverflow: return NSYM_OVERFLOW;
    case nsym::ErrorCode::kBasisMismatch: return NSYM_BASIS_MISMATCH;
    case nsym::ErrorCode::kClassViolation: return NSYM_CLASS;
    case nsym::ErrorCode::kParse: return NSYM_PARSE;
  }
  return NSYM_INTERNAL;
}

template <typename F>
nsym_status guarded(F body) {
  try {
    body();
    return NSYM_OK;
  } catch (const nsym::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NSYM_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NSYM_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) nsym::fail(nsym::ErrorCode::kInvalidArgument, what);
}

nsym::IntSeq seq(const int* data, std::size_t len) {
  require(len == 0 || data != nullptr, "null array with nonzero length");
  return nsym::IntSeq(data, data + len);
}

nsym::Composition composition(const int* data, std::size_t len) { return nsym::Composition(seq(data, len)); }

nsym::ExpansionOptions expansion_options(const nsym_options* o) {
  nsym::ExpansionOptions out;
  if (o) {
    out.max_rows = o->max_k;
    out.jobs = std::max(1, o->jobs);
  }
  require(out.max_rows >= 0, "max_k must be nonnegative");
  if (out.max_rows > nsym::kHardMaxRows) {
    nsym::fail(nsym::ErrorCode::kBoundExceeded, "max_k may not exceed " + std::to_string(nsym::kHardMaxRows));
  }
  return out;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit_expr(nsym::BasisExpr e, nsym_expr** out) {
  require(out != nullptr, "null output pointer");
  *out = new nsym_expr(std::move(e));
}

nsym::Basis to_basis(nsym_basis b) {
  switch (b) {
    case NSYM_BASIS_H: return nsym::Basis::H;
    case NSYM_BASIS_R: return nsym::Basis::R;
    case NSYM_BASIS_M: return nsym::Basis::M;
    case NSYM_BASIS_DI: return nsym::Basis::dI;
    case NSYM_BASIS_H_SYM: return nsym::Basis::h_sym;
  }
  nsym::fail(nsym::ErrorCode::kInvalidArgument, "unknown basis");
}

nsym_basis from_basis(nsym::Basis b) {
  switch (b) {
    case nsym::Basis::H: return NSYM_BASIS_H;
    case nsym::Basis::R: return NSYM_BASIS_R;
    case nsym::Basis::M: return NSYM_BASIS_M;
    case nsym::Basis::dI: return NSYM_BASIS_DI;
    case nsym::Basis::h_sym: return NSYM_BASIS_H_SYM;
  }
  return NSYM_BASIS_H;
}

std::string format_expr(const nsym::BasisExpr& e, nsym_format f) {
  switch (f) {
    case NSYM_FORMAT_TEXT: return nsym::to_text(e);
    case NSYM_FORMAT_JSON: return nsym::to_json(e);
    case NSYM_FORMAT_LATEX: return nsym::to_latex(e);
  }
  nsym::fail(nsym::ErrorCode::kInvalidArgument, "unknown output format");
}

std::string sign_prefix(int sign) { return sign < 0 ? "-" : "+"; }

std::string format_decomposition(const std::vector<nsym::PrefixTerm>& terms, nsym_format f) {
  using nsym::to_string;
  if (f == NSYM_FORMAT_JSON) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
      j.push_back({{"sign", t.sign}, {"prefix", t.prefix}, {"mu", t.shape.mu}, {"nu", t.shape.nu}});
    }
    return j.dump();
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (f == NSYM_FORMAT_TEXT) {
      out << sign_prefix(t.sign) << " H" << to_string(t.prefix) << " * I" << to_string(t.shape.mu) << "/"
          << to_string(t.shape.nu) << '\n';
    } else {
      if (i > 0 || t.sign < 0) out << (t.sign < 0 ? "- " : "+ ");
      out << "H_{" << to_string(t.prefix) << "} \\mathfrak{S}_{" << to_string(t.shape.mu) << "/"
          << to_string(t.shape.nu) << "}\n";
    }
  }
  return out.str();
}

std::string format_covering(const nsym::TunnelHookCovering& g, nsym_format f) {
  if (f == NSYM_FORMAT_JSON) return nsym::covering_to_json(g);
  std::ostringstream out;
  out << "sign " << sign_prefix(g.total_sign) << "1 delta " << nsym::to_string(g.delta_seq) << " terminals";
  for (const auto& c : g.terminal_cells()) out << " (" << c.row << "," << c.col << ")";
  if (g.sigma) out << " sigma " << nsym::to_string(g.sigma->one_line());
  return out.str();
}

nsym::IntSeq zero_if_absent(const int* nu, std::size_t nu_len, std::size_t k) {
  return nu ? seq(nu, nu_len) : nsym::IntSeq(k, 0);
}

}  // namespace

extern "C" {

nsym_options nsym_options_default(void) { return nsym_options{nsym::kDefaultMaxRows, 1}; }

const char* nsym_last_error(void) { return g_last_error.c_str(); }

const char* nsym_status_name(nsym_status status) {
  switch (status) {
    case NSYM_OK: return "ok";
    case NSYM_INVALID_ARGUMENT: return "invalid argument";
    case NSYM_BOUND: return "bound exceeded";
    case NSYM_OVERFLOW: return "coefficient overflow";
    case NSYM_BASIS_MISMATCH: return "basis mismatch";
    case NSYM_CLASS: return "class violation";
    case NSYM_PARSE: return "parse error";
    case NSYM_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nsym_string_free(char* s) { std::free(s); }

nsym_status nsym_immaculate(const int* mu, size_t k, const nsym_options* options, nsym_expr** out) {
  return guarded([&] { emit_expr(nsym::immaculate_to_H(seq(mu, k), expansion_options(options)), out); });
}

nsym_status nsym_skew_immaculate(const int* mu, size_t mu_len, const int* nu, size_t nu_len,
                                 const nsym_options* options, nsym_expr** out) {
  return guarded([&] {
    nsym::SkewShape s{seq(mu, mu_len), seq(nu, nu_len)};
    emit_expr(nsym::skew_immaculate_to_H(s, expansion_options(options)), out);
  });
}

nsym_status nsym_monomial(const int* alpha, size_t k, const nsym_options* options, nsym_expr** out) {
  return guarded(
      [&] { emit_expr(nsym::monomial_to_dual_immaculate(composition(alpha, k), expansion_options(options)), out); });
}

nsym_status nsym_immaculate_ribbon(const int* alpha, size_t k, int force, const nsym_options* options,
                                   nsym_expr** out, int* unproven) {
  return guarded([&] {
    const nsym::Composition a = composition(alpha, k);
    const bool outside = !nsym::im2rib_class(a);
    if (unproven) *unproven = outside ? 1 : 0;
    emit_expr(nsym::immaculate_to_ribbon_direct(a, force != 0, expansion_options(options).max_rows), out);
  });
}

nsym_status nsym_ribbon_product(const int* alpha, size_t alpha_len, const int* beta, size_t beta_len,
                                nsym_expr** out) {
  return guarded(
      [&] { emit_expr(nsym::ribbon_product(composition(alpha, alpha_len), composition(beta, beta_len)), out); });
}

nsym_status nsym_expr_parse(const char* text, nsym_format format, nsym_expr** out) {
  return guarded([&] {
    require(text != nullptr, "null expression text");
    if (format == NSYM_FORMAT_JSON) {
      emit_expr(nsym::parse_json(text), out);
    } else if (format == NSYM_FORMAT_TEXT) {
      emit_expr(nsym::parse_text(text), out);
    } else {
      nsym::fail(nsym::ErrorCode::kInvalidArgument, "expressions can be parsed from text or JSON only");
    }
  });
}

nsym_status nsym_expr_from_term(nsym_basis basis, const int* index, size_t len, nsym_expr** out) {
  return guarded([&] { emit_expr(nsym::BasisExpr::term(to_basis(basis), composition(index, len)), out); });
}

nsym_status nsym_expr_convert(const nsym_expr* e, nsym_basis to, nsym_expr** out) {
  return guarded([&] {
    require(e != nullptr, "null expression");
    const nsym::Basis from = e->value.basis();
    const nsym::Basis target = to_basis(to);
    if (from == target) {
      emit_expr(e->value, out);
    } else if (from == nsym::Basis::H && target == nsym::Basis::R) {
      emit_expr(nsym::H_to_ribbon(e->value), out);
    } else if (from == nsym::Basis::R && target == nsym::Basis::H) {
      emit_expr(nsym::ribbon_to_H(e->value), out);
    } else if (from == nsym::Basis::H && target == nsym::Basis::h_sym) {
      emit_expr(nsym::forgetful_to_h(e->value), out);
    } else {
      nsym::fail(nsym::ErrorCode::kBasisMismatch, "no conversion from " + std::string(nsym::basis_label(from)) +
                                                      " to " + std::string(nsym::basis_label(target)));
    }
  });
}

nsym_status nsym_expr_format(const nsym_expr* e, nsym_format format, char** out) {
  return guarded([&] {
    require(e != nullptr && out != nullptr, "null argument");
    *out = dup_string(format_expr(e->value, format));
  });
}

nsym_basis nsym_expr_basis(const nsym_expr* e) { return e ? from_basis(e->value.basis()) : NSYM_BASIS_H; }

size_t nsym_expr_size(const nsym_expr* e) { return e ? e->flat.size() : 0; }

nsym_status nsym_expr_term(const nsym_expr* e, size_t i, int64_t* coeff, const int** index, size_t* len) {
  return guarded([&] {
    require(e != nullptr, "null expression");
    require(i < e->flat.size(), "term index out of range");
    const auto& [c, comp] = e->flat[i];
    if (coeff) *coeff = c;
    if (index) *index = comp->parts().data();
    if (len) *len = comp->size();
  });
}

int nsym_expr_equal(const nsym_expr* a, const nsym_expr* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

void nsym_expr_free(nsym_expr* e) { delete e; }

nsym_status nsym_straighten(const int* mu, size_t mu_len, const int* nu, size_t nu_len, int* sign, int* mu_out,
                            int* nu_out, size_t* out_len) {
  return guarded([&] {
    require(sign && mu_out && nu_out && out_len, "null output pointer");
    const nsym::StraightenResult r = nsym::straighten_skew({seq(mu, mu_len), seq(nu, nu_len)});
    *sign = r.sign;
    *out_len = r.shape.mu.size();
    std::copy(r.shape.mu.begin(), r.shape.mu.end(), mu_out);
    std::copy(r.shape.nu.begin(), r.shape.nu.end(), nu_out);
  });
}

nsym_status nsym_decompose(const int* mu, size_t k, int m, nsym_format format, const nsym_options* options,
                           char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto terms = nsym::skew_prefix_decomposition(seq(mu, k), m, expansion_options(options));
    *out = dup_string(format_decomposition(terms, format));
  });
}

nsym_status nsym_thc_open(const int* mu, size_t mu_len, const int* nu, size_t nu_len, const nsym_options* options,
                          nsym_covering_stream** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    nsym::IntSeq m = seq(mu, mu_len);
    nsym::IntSeq n = zero_if_absent(nu, nu_len, mu_len);
    nsym::pad_to_same_length(m, n);
    nsym::EnumerationOptions opt;
    opt.max_rows = expansion_options(options).max_rows;
    *out = new nsym_covering_stream{nsym::CoveringStream(std::move(m), std::move(n), opt)};
  });
}

nsym_status nsym_thc_next(nsym_covering_stream* s, nsym_format format, char** out, int* done) {
  return guarded([&] {
    require(s && out && done, "null argument");
    *out = nullptr;
    auto g = s->stream.next();
    *done = g ? 0 : 1;
    if (g) *out = dup_string(format_covering(*g, format));
  });
}

void nsym_thc_free(nsym_covering_stream* s) { delete s; }

nsym_status nsym_thc_render(const int* mu, size_t mu_len, const int* nu, size_t nu_len, const int* sigma,
                            size_t sigma_len, const int* cells, size_t cell_count, nsym_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(format != NSYM_FORMAT_JSON, "diagrams render as text or LaTeX only");
    nsym::IntSeq m = seq(mu, mu_len);
    nsym::IntSeq n = zero_if_absent(nu, nu_len, mu_len);
    nsym::pad_to_same_length(m, n);
    const nsym::GbprDiagram d = nsym::GbprDiagram::build(m, n, 0);
    std::vector<nsym::TunnelHook> hooks;
    if (sigma_len > 0) {
      require(cell_count == 0, "give either a permutation or terminal cells, not both");
      hooks = nsym::covering_from_permutation(m, nsym::Permutation(seq(sigma, sigma_len))).hooks;
    } else if (cell_count > 0) {
      require(cells != nullptr, "null cell array");
      std::vector<nsym::Cell> terminals;
      for (std::size_t i = 0; i < cell_count; ++i) terminals.push_back({cells[2 * i], cells[2 * i + 1]});
      hooks = nsym::realize_covering(m, n, terminals).hooks;
    }
    const auto f = format == NSYM_FORMAT_LATEX ? nsym::RenderFormat::kLatex : nsym::RenderFormat::kAscii;
    *out = dup_string(nsym::render(d, hooks, f));
  });
}

nsym_status nsym_verify(const char* suite, int n, const nsym_options* options, char** report, int* passed) {
  return guarded([&] {
    require(suite && report && passed, "null argument");
    const auto reports = nsym::run_verification(suite, n, expansion_options(options).max_rows);
    *passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) ? 1 : 0;
    *report = dup_string(nsym::reports_to_json(reports));
  });
}

}  // extern "C"
