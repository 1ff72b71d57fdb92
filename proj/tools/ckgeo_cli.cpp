// Command-line front end for the ckgeo library.
//
// Exit codes: 0 ok, 2 parse/input error, 3 resource error, 4 I/O error,
// 5 audit failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ckgeo/ckgeo.hpp"

namespace {

using namespace ckgeo;

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kResourceError = 3,
  kIoError = 4,
  kAuditFailure = 5,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

std::string letters_to_string(const std::vector<Letter>& letters) {
  std::string out;
  for (Letter x : letters) {
    if (!out.empty()) out.push_back(' ');
    out += to_string(x);
  }
  return out;
}

template <GroupModel M>
std::string ball_output(const M& model, int radius, const std::string& format) {
  const auto ball = build_ball(model, radius);
  std::ostringstream out;
  if (format.empty()) {
    out << "model=" << M::name() << " radius=" << radius << " states=" << ball.size() << "\n";
    out << "levels:";
    for (std::size_t n : ball.frontier_sizes()) out << ' ' << n;
    out << "\n";
  } else {
    export_ball(ball, format == "csv" ? ExportFormat::csv : ExportFormat::jsonl, out);
  }
  return out.str();
}

struct AuditOptions {
  int radius = 12;
  std::string model = "ck";
  bool broken = false;
  std::size_t dec_stride = 1;
};

template <GroupModel M, class Lang>
void add_language_section(nlohmann::json& j, bool& pass, const BallIndex<M>& ball,
                          const Lang& lang, bool broken) {
  AuditReport r = broken ? check_standard_language(ball, TruncatedLanguage<Lang>{lang})
                         : check_standard_language(ball, lang);
  pass = pass && r.pass();
  j["standard_language"] = r;
}

template <GroupModel M>
nlohmann::json audit_common(const BallIndex<M>& ball, const AuditOptions& opt, bool& pass) {
  nlohmann::json j;
  j["model"] = std::string(M::name());
  j["radius"] = ball.radius();
  j["states"] = ball.size();
  const AuditReport dead = audit_dead_ends(ball, opt.dec_stride);
  const LastLetterReport last = check_last_letter(ball);
  pass = dead.pass() && last.pass();
  j["dead_ends"] = dead;
  j["last_letter"] = last;
  return j;
}

int run_audit(const AuditOptions& opt) {
  bool pass = true;
  nlohmann::json j;
  if (opt.model == "ck") {
    const auto ball = build_ball(CkModel{}, opt.radius);
    j = audit_common(ball, opt, pass);
    const ContinuationReport cont_report = check_continuation_letters(ball);
    pass = pass && cont_report.pass();
    j["continuation_letters"] = cont_report;
    add_language_section(j, pass, ball, CkStandardLanguage{}, opt.broken);
  } else if (opt.model == "z2") {
    const auto ball = build_ball(Z2Model{}, opt.radius);
    j = audit_common(ball, opt, pass);
    add_language_section(j, pass, ball, Z2StandardLanguage{}, opt.broken);
  } else {
    const auto ball = build_ball(KleinModel{}, opt.radius);
    j = audit_common(ball, opt, pass);
  }
  j["verdict"] = pass ? "pass" : "fail";
  std::cout << j.dump(2) << "\n";
  return pass ? kOk : kAuditFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesics, moves and Cayley-ball audits for the central extension of the Klein bottle group"};
  app.require_subcommand(1);

  std::string word_text, element_text, out_path;
  bool json = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a word to its normal form (k,m,n)");
  eval->add_option("word", word_text, "word, e.g. \"a b a^-1 b\"")->required();
  eval->add_flag("--json", json, "print {\"k\":..,\"m\":..,\"n\":..}");

  auto* len = app.add_subcommand("len", "Word length of an element");
  len->add_option("element", element_text, "\"(k,m,n)\"")->required();

  auto* stdc = app.add_subcommand("std", "Standard representative of an element");
  stdc->add_option("element", element_text, "\"(k,m,n)\"")->required();

  auto* cont = app.add_subcommand("continuations", "Letters that extend geodesics of an element");
  cont->add_option("element", element_text, "\"(k,m,n)\"")->required();

  auto* classify = app.add_subcommand("classify", "Region case of an element");
  classify->add_option("element", element_text, "\"(k,m,n)\"")->required();

  auto* isgeo = app.add_subcommand("is-geodesic", "Whether a word is geodesic");
  isgeo->add_option("word", word_text)->required();

  std::size_t cap = kDefaultOrbitCap;
  auto* orb = app.add_subcommand("orbit", "Closure of a geodesic word under basic moves");
  orb->add_option("word", word_text)->required();
  orb->add_option("--cap", cap, "maximum orbit size");
  orb->add_flag("--json", json);

  auto* thm2 = app.add_subcommand("check-theorem2",
                                  "Compare the move orbit of std_rep with all geodesics");
  thm2->add_option("element", element_text, "\"(k,m,n)\"")->required();
  thm2->add_option("--cap", cap, "maximum orbit size");
  thm2->add_flag("--json", json);

  auto* young = app.add_subcommand("young", "Young decomposition of a geodesic word (JSON)");
  young->add_option("word", word_text)->required();

  int radius = 0;
  std::string model = "ck", format;
  auto* ball = app.add_subcommand("ball", "Build a Cayley ball and print or export it");
  ball->add_option("radius", radius)->required()->check(CLI::NonNegativeNumber);
  ball->add_option("--model", model)->check(CLI::IsMember({"ck", "klein", "z2"}));
  ball->add_option("--export", format)->check(CLI::IsMember({"csv", "jsonl"}));
  ball->add_option("--out", out_path, "output file (default stdout)");

  AuditOptions audit_opt;
  auto* audit = app.add_subcommand("audit", "Run the dead-end, parity, last-letter, "
                                            "continuation and standard-language audits");
  audit->add_option("--radius", audit_opt.radius)->check(CLI::Range(2, 64));
  audit->add_option("--model", audit_opt.model)->check(CLI::IsMember({"ck", "klein", "z2"}));
  audit->add_flag("--broken-language", audit_opt.broken,
                  "negative control: truncate the standard language");
  audit->add_option("--dec-stride", audit_opt.dec_stride,
                    "check the last-letter dead-end criterion on every n-th state (0 = off)");

  RenderSpec spec;
  auto* render = app.add_subcommand("render", "Render a word's lattice path as SVG");
  render->add_option("word", word_text)->required();
  render->add_option("--out", out_path, "output .svg file")->required();
  render->add_flag("--cells", spec.orientation_marks, "draw per-cell orientation glyphs");
  render->add_flag("--young", spec.young, "shade the Young decomposition");
  render->add_option("--cell-size", spec.cell, "pixels per lattice cell")
      ->check(CLI::Range(4, 400));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*eval) {
      const Element g = evaluate(parse_word(word_text));
      if (json) {
        std::cout << nlohmann::json(g).dump() << "\n";
      } else {
        std::cout << to_string(g) << "\n";
      }
    } else if (*len) {
      std::cout << length(parse_element(element_text)) << "\n";
    } else if (*stdc) {
      std::cout << format_word(std_rep(parse_element(element_text))) << "\n";
    } else if (*cont) {
      std::cout << letters_to_string(continuations(parse_element(element_text))) << "\n";
    } else if (*classify) {
      std::cout << to_string(classify_region(parse_element(element_text))) << "\n";
    } else if (*isgeo) {
      std::cout << (is_geodesic(parse_word(word_text)) ? "true" : "false") << "\n";
    } else if (*orb) {
      const auto words = orbit(parse_word(word_text), cap);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Word& w : words) arr.push_back(format_word(w));
        std::cout << nlohmann::json{{"size", words.size()}, {"words", arr}}.dump(2) << "\n";
      } else {
        for (const Word& w : words) std::cout << format_word(w) << "\n";
      }
    } else if (*thm2) {
      const Element g = parse_element(element_text);
      const auto ball_index = build_ball(CkModel{}, static_cast<int>(length(g)));
      const Theorem2Report report = check_theorem2(ball_index, g, kDefaultGeodesicCap, cap);
      if (json) {
        std::cout << nlohmann::json(report).dump(2) << "\n";
      } else {
        std::cout << "element=" << to_string(report.element)
                  << " geodesic_count=" << report.geodesic_count
                  << " orbit_size=" << report.orbit_size
                  << " connected=" << (report.connected ? "true" : "false") << "\n";
      }
    } else if (*young) {
      std::cout << nlohmann::json(young_decomposition(parse_word(word_text))).dump(2) << "\n";
    } else if (*ball) {
      std::string text;
      if (model == "ck") {
        text = ball_output(CkModel{}, radius, format);
      } else if (model == "klein") {
        text = ball_output(KleinModel{}, radius, format);
      } else {
        text = ball_output(Z2Model{}, radius, format);
      }
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
      }
    } else if (*audit) {
      return run_audit(audit_opt);
    } else if (*render) {
      spec.word = parse_word(word_text);
      write_file(out_path, render_svg(spec));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResourceError;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kResourceError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
