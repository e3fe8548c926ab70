// Command-line front end. Talks to the library only through nsym.h.
#include <charconv>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsym/nsym.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

const char* kLegend = R"(Diagram legend (top row printed first, row 1 at the bottom):
  G  grey cell (skew part)        B  blue cell (surplus)
  R  red cell (deficit)           P  purple tunnel cell
  .  empty position reached only by another row's hook
  With an overlay each cell carries the label of the hook covering it.)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty() && item.front() == '+') item.erase(item.begin());
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string("malformed ") + what + " '" + text + "': expected comma-separated integers");
    }
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

// "p,q;p,q;..." terminal cells
std::vector<int> parse_cells(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::vector<int> pair = parse_ints(text.substr(start, end == std::string::npos ? std::string::npos : end - start),
                                       "terminal cell");
    if (pair.size() != 2) throw UsageError("terminal cells are written row,col;row,col;...");
    out.insert(out.end(), pair.begin(), pair.end());
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

void check(nsym_status status) {
  if (status != NSYM_OK) {
    throw LibraryError(std::string(nsym_status_name(status)) + ": " + nsym_last_error());
  }
}

struct ExprDeleter {
  void operator()(nsym_expr* e) const { nsym_expr_free(e); }
};
using ExprPtr = std::unique_ptr<nsym_expr, ExprDeleter>;

struct StringDeleter {
  void operator()(char* s) const { nsym_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

ExprPtr take(nsym_expr* e) { return ExprPtr(e); }

std::string take_string(char* s) {
  StringPtr owner(s);
  return s ? std::string(s) : std::string();
}

nsym_format format_from(const std::string& name) {
  if (name == "text") return NSYM_FORMAT_TEXT;
  if (name == "json") return NSYM_FORMAT_JSON;
  if (name == "latex") return NSYM_FORMAT_LATEX;
  throw UsageError("unknown format '" + name + "'");
}

nsym_basis basis_from(const std::string& name) {
  if (name == "H") return NSYM_BASIS_H;
  if (name == "R") return NSYM_BASIS_R;
  if (name == "M") return NSYM_BASIS_M;
  if (name == "dI") return NSYM_BASIS_DI;
  if (name == "h" || name == "h_sym") return NSYM_BASIS_H_SYM;
  throw UsageError("unknown basis '" + name + "'");
}

std::string format_expr(const nsym_expr* e, nsym_format f) {
  char* out = nullptr;
  check(nsym_expr_format(e, f, &out));
  return take_string(out);
}

ExprPtr convert(ExprPtr e, nsym_basis to) {
  nsym_expr* out = nullptr;
  check(nsym_expr_convert(e.get(), to, &out));
  return take(out);
}

std::string tag_unproven(const std::string& body, nsym_format f) {
  switch (f) {
    case NSYM_FORMAT_JSON: return "{\"tag\":\"UNPROVEN-CLASS\"," + body.substr(1);
    case NSYM_FORMAT_LATEX: return "% UNPROVEN-CLASS\n" + body;
    case NSYM_FORMAT_TEXT: break;
  }
  return "UNPROVEN-CLASS: " + body;
}

struct Settings {
  int max_k = 10;
  int jobs = 1;
  std::string format = "text";
  nsym_options options() const { return nsym_options{max_k, jobs}; }
  nsym_format fmt() const { return format_from(format); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact expansions of immaculate and ribbon noncommutative symmetric functions via tunnel hook coverings"};
  app.footer(kLegend);
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  app.add_option("--max-k", settings.max_k, "Row bound for enumerations (at most 12)")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  app.add_option("--jobs", settings.jobs, "Worker threads for the covering fold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->envname("NSYM_FORMAT")
      ->capture_default_str();

  std::string shape, skew, by, basis = "H", from, to, expr_text, index, sigma, cells, suite = "all";
  bool force = false;
  int prefix = 1;
  int n = 6;

  auto* expand = app.add_subcommand("expand", "Expand a basis element")->require_subcommand(1);
  auto* exp_imm = expand->add_subcommand("immaculate", "Immaculate function in the H, R or h basis");
  exp_imm->add_option("--shape", shape, "Comma-separated integers, negatives allowed")->required();
  exp_imm->add_option("--skew", skew, "Inner shape; shorter than --shape is zero-padded");
  exp_imm->add_option("--basis", basis, "Target basis")->check(CLI::IsMember({"H", "R", "h"}))->capture_default_str();
  exp_imm->add_flag("--force", force, "Use the direct ribbon formula outside the proven class");
  auto* exp_mon = expand->add_subcommand("monomial", "Monomial quasisymmetric function in the dual immaculate basis");
  exp_mon->add_option("--shape", shape, "Composition")->required();
  auto* exp_rp = expand->add_subcommand("ribbon-product", "Product of two ribbons");
  exp_rp->add_option("--shape", shape, "Left composition")->required();
  exp_rp->add_option("--by", by, "Right composition")->required();

  auto* conv = app.add_subcommand("convert", "Change basis between H and R (or H to h)");
  conv->add_option("--from", from, "Source basis")->required()->check(CLI::IsMember({"H", "R"}));
  conv->add_option("--to", to, "Target basis")->required()->check(CLI::IsMember({"H", "R", "h"}));
  auto* conv_src = conv->add_option("--expr", expr_text, "Expression text such as 'H(2,1) - H(3)'");
  conv->add_option("--index", index, "Single basis element index")->excludes(conv_src);

  auto* str = app.add_subcommand("straighten", "Normalize a skew shape to one with partition inner shape");
  str->add_option("--shape", shape, "Outer shape")->required();
  str->add_option("--skew", skew, "Inner shape")->required();

  auto* dec = app.add_subcommand("decompose", "Split an immaculate function into H prefixes and skew immaculates");
  dec->add_option("--shape", shape, "Shape")->required();
  dec->add_option("--prefix", prefix, "Number of leading rows")->required();

  auto* thc = app.add_subcommand("thc", "Tunnel hook coverings")->require_subcommand(1);
  auto* thc_list = thc->add_subcommand("list", "List every covering");
  thc_list->add_option("--shape", shape, "Shape")->required();
  thc_list->add_option("--skew", skew, "Inner partition");
  auto* thc_render = thc->add_subcommand("render", "Draw the diagram, optionally with a covering");
  thc_render->add_option("--shape", shape, "Shape")->required();
  thc_render->add_option("--skew", skew, "Inner partition");
  auto* sigma_opt = thc_render->add_option("--sigma", sigma, "Permutation selecting the covering");
  thc_render->add_option("--cells", cells, "Terminal cells row,col;row,col;...")->excludes(sigma_opt);

  auto* ver = app.add_subcommand("verify", "Cross-check production paths against the oracles");
  ver->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"all", "oracle", "skew", "duality", "ribbon", "roundtrip", "forgetful"}))
      ->capture_default_str();
  ver->add_option("--n", n, "Largest composition size")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const nsym_options opts = settings.options();
    const nsym_format f = settings.fmt();
    const std::vector<int> mu = parse_ints(shape, "shape");

    if (*exp_imm) {
      const bool has_skew = !skew.empty();
      if (basis == "R" && !has_skew) {
        int unproven = 0;
        nsym_expr* raw = nullptr;
        nsym_status status = nsym_immaculate_ribbon(mu.data(), mu.size(), force ? 1 : 0, &opts, &raw, &unproven);
        if (status == NSYM_OK) {
          ExprPtr e = take(raw);
          const std::string body = format_expr(e.get(), f);
          std::cout << (unproven ? tag_unproven(body, f) : body) << '\n';
          if (unproven) std::cerr << "warning: shape is outside the proven class; result is UNPROVEN-CLASS\n";
          return 0;
        }
        // Outside the class without --force, or a nonpositive part: go through H.
        if (status != NSYM_CLASS && status != NSYM_INVALID_ARGUMENT) check(status);
      }
      nsym_expr* raw = nullptr;
      if (has_skew) {
        const std::vector<int> nu = parse_ints(skew, "skew shape");
        check(nsym_skew_immaculate(mu.data(), mu.size(), nu.data(), nu.size(), &opts, &raw));
      } else {
        check(nsym_immaculate(mu.data(), mu.size(), &opts, &raw));
      }
      ExprPtr e = take(raw);
      if (basis != "H") e = convert(std::move(e), basis_from(basis));
      std::cout << format_expr(e.get(), f) << '\n';
    } else if (*exp_mon) {
      nsym_expr* raw = nullptr;
      check(nsym_monomial(mu.data(), mu.size(), &opts, &raw));
      std::cout << format_expr(take(raw).get(), f) << '\n';
    } else if (*exp_rp) {
      const std::vector<int> right = parse_ints(by, "composition");
      nsym_expr* raw = nullptr;
      check(nsym_ribbon_product(mu.data(), mu.size(), right.data(), right.size(), &raw));
      std::cout << format_expr(take(raw).get(), f) << '\n';
    } else if (*conv) {
      nsym_expr* raw = nullptr;
      if (!index.empty()) {
        const std::vector<int> idx = parse_ints(index, "index");
        check(nsym_expr_from_term(basis_from(from), idx.data(), idx.size(), &raw));
      } else if (!expr_text.empty()) {
        const bool json = expr_text.find('{') != std::string::npos;
        check(nsym_expr_parse(expr_text.c_str(), json ? NSYM_FORMAT_JSON : NSYM_FORMAT_TEXT, &raw));
      } else {
        throw UsageError("convert needs --expr or --index");
      }
      ExprPtr e = take(raw);
      if (nsym_expr_basis(e.get()) != basis_from(from)) throw UsageError("expression basis differs from --from");
      std::cout << format_expr(convert(std::move(e), basis_from(to)).get(), f) << '\n';
    } else if (*str) {
      const std::vector<int> nu = parse_ints(skew, "skew shape");
      const std::size_t cap = std::max(mu.size(), nu.size());
      std::vector<int> mu_out(cap), nu_out(cap);
      int sign = 0;
      std::size_t len = 0;
      check(nsym_straighten(mu.data(), mu.size(), nu.data(), nu.size(), &sign, mu_out.data(), nu_out.data(), &len));
      auto join = [&](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
      };
      if (f == NSYM_FORMAT_JSON) {
        std::cout << "{\"sign\":" << sign << ",\"mu\":[" << join(mu_out) << "],\"nu\":[" << join(nu_out) << "]}\n";
      } else if (sign == 0) {
        std::cout << "0\n";
      } else if (f == NSYM_FORMAT_LATEX) {
        std::cout << (sign < 0 ? "-" : "") << "\\mathfrak{S}_{(" << join(mu_out) << ")/(" << join(nu_out) << ")}\n";
      } else {
        std::cout << (sign < 0 ? "-" : "+") << " I(" << join(mu_out) << ")/(" << join(nu_out) << ")\n";
      }
    } else if (*dec) {
      char* out = nullptr;
      check(nsym_decompose(mu.data(), mu.size(), prefix, f, &opts, &out));
      std::string body = take_string(out);
      std::cout << body << (f == NSYM_FORMAT_JSON ? "\n" : "");
    } else if (*thc_list) {
      const std::vector<int> nu = parse_ints(skew, "skew shape");
      nsym_covering_stream* stream = nullptr;
      check(nsym_thc_open(mu.data(), mu.size(), skew.empty() ? nullptr : nu.data(), nu.size(), &opts, &stream));
      std::unique_ptr<nsym_covering_stream, void (*)(nsym_covering_stream*)> owner(stream, nsym_thc_free);
      const nsym_format line_format = f == NSYM_FORMAT_JSON ? NSYM_FORMAT_JSON : NSYM_FORMAT_TEXT;
      if (f == NSYM_FORMAT_JSON) std::cout << '[';
      bool first = true;
      while (true) {
        char* out = nullptr;
        int done = 0;
        check(nsym_thc_next(stream, line_format, &out, &done));
        if (done) break;
        if (f == NSYM_FORMAT_JSON) {
          std::cout << (first ? "" : ",") << take_string(out);
        } else {
          std::cout << take_string(out) << '\n';
        }
        first = false;
      }
      if (f == NSYM_FORMAT_JSON) std::cout << "]\n";
    } else if (*thc_render) {
      if (f == NSYM_FORMAT_JSON) throw UsageError("thc render supports --format text or latex");
      const std::vector<int> nu = parse_ints(skew, "skew shape");
      const std::vector<int> perm = parse_ints(sigma, "permutation");
      const std::vector<int> cell_list = cells.empty() ? std::vector<int>{} : parse_cells(cells);
      char* out = nullptr;
      check(nsym_thc_render(mu.data(), mu.size(), skew.empty() ? nullptr : nu.data(), nu.size(), perm.data(),
                            perm.size(), cell_list.data(), cell_list.size() / 2, f, &out));
      std::cout << take_string(out);
    } else if (*ver) {
      char* out = nullptr;
      int passed = 0;
      check(nsym_verify(suite.c_str(), n, &opts, &out, &passed));
      std::cout << take_string(out) << '\n';
      return passed ? 0 : kExitVerify;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
