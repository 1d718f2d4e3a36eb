#include "fi1/cli.hpp"

#include <functional>
#include <set>

#include "CLI11.hpp"

#include "fi1/decomposition.hpp"
#include "fi1/errors.hpp"
#include "fi1/io.hpp"
#include "fi1/numerical.hpp"
#include "fi1/presentation.hpp"
#include "fi1/ptrans.hpp"
#include "fi1/render.hpp"
#include "fi1/subsemigroup.hpp"
#include "fi1/witness.hpp"
#include "fi1/word.hpp"

namespace fi1::cli {

namespace {

using io::Json;

// Text rendering: scalars and flat arrays inline, objects one key per line.
void write_text(std::ostream& out, Json const& j, std::string const& indent = "") {
  if (!j.is_object()) {
    out << indent << j.dump() << '\n';
    return;
  }
  for (auto const& [key, value] : j.items()) {
    if (value.is_object() && !value.empty()) {
      out << indent << key << ":\n";
      write_text(out, value, indent + "  ");
    } else {
      out << indent << key << ": " << value.dump() << '\n';
    }
  }
}

struct Options {
  bool text = false;
  std::string word;
  std::string e1, e2;
  std::int64_t exponent = 1;
  std::string file;
  std::int64_t dmax = 4;
  std::int32_t n = 1;
  std::int64_t max_ij = 2;
  std::string action;
  std::size_t length = 8;
  std::size_t search_length = 10;
  std::size_t search_steps = 20'000;
  std::int64_t amax = 3, bmax = 3;
  std::string mark;
};

GeneratorSet load_generators(std::string const& path) {
  return io::generators_from_json(io::read_json_file(path));
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Computations in the free inverse monoid of rank one"};
  app.name("fi1");
  app.require_subcommand(1);
  Options o;
  app.add_flag("--text", o.text, "Plain text instead of JSON");
  app.fallthrough();

  // Each handler returns the JSON document to print; raw text output (DOT)
  // goes through `raw`.
  std::function<Json()> handler;
  std::string raw;
  bool is_raw = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a word in x, x^-1");
  eval->add_option("word", o.word)->required();
  eval->callback([&] {
    handler = [&] { return io::to_json(eval_word(parse_word(o.word))); };
  });

  auto* mul = app.add_subcommand("mul", "Multiply two elements");
  mul->add_option("e1", o.e1)->required();
  mul->add_option("e2", o.e2)->required();
  mul->callback([&] {
    handler = [&] {
      return io::to_json(io::parse_element(o.e1) * io::parse_element(o.e2));
    };
  });

  auto* inv = app.add_subcommand("inv", "Inverse of an element");
  inv->add_option("e", o.e1)->required();
  inv->callback([&] {
    handler = [&] { return io::to_json(invert(io::parse_element(o.e1))); };
  });

  auto* pw = app.add_subcommand("pow", "Positive power of an element");
  pw->add_option("e", o.e1)->required();
  pw->add_option("n", o.exponent)->required();
  pw->callback([&] {
    handler = [&] {
      return io::to_json(power(io::parse_element(o.e1), o.exponent));
    };
  });

  auto* cls = app.add_subcommand("classify", "Decide finite presentability");
  cls->add_option("gens", o.file)->required();
  cls->callback([&] {
    handler = [&] { return io::to_json(classify(load_generators(o.file))); };
  });

  auto* wit = app.add_subcommand("witness", "Certificate of non-finite presentability");
  wit->add_option("gens", o.file)->required();
  wit->callback([&] {
    handler = [&] {
      Witness const w = non_fp_witness(load_generators(o.file));
      Json j = io::to_json(w);
      j["verified"] = verify_witness(w);
      return j;
    };
  });

  auto* clo = app.add_subcommand("closure", "Elements of <A> in C_dmax");
  clo->add_option("gens", o.file)->required();
  clo->add_option("--dmax", o.dmax)->required();
  clo->callback([&] {
    handler = [&] {
      if (o.dmax < 1) {
        throw DomainError("--dmax must be positive");
      }
      auto const elems = enumerate_closure(load_generators(o.file), o.dmax);
      Json j;
      j["dmax"] = o.dmax;
      j["size"] = elems.size();
      j["elements"] = io::to_json(elems);
      return j;
    };
  });

  auto* idem = app.add_subcommand("idempotents", "Idempotents of <A>");
  idem->add_option("gens", o.file)->required();
  idem->callback([&] {
    handler = [&] {
      GeneratorSet const a = load_generators(o.file);
      Json j;
      if (a.has_positive() && a.has_negative()) {
        j["count"] = "infinite";
      } else {
        auto const es = finite_idempotents(a);
        j["count"] = es.size();
        j["idempotents"] = io::to_json(es);
      }
      return j;
    };
  });

  auto* dec = app.add_subcommand("decompose", "Piece decomposition of <A>");
  dec->add_option("gens", o.file)->required();
  dec->callback([&] {
    handler = [&] { return io::to_json(decompose(load_generators(o.file))); };
  });

  auto* sch = app.add_subcommand("schein-verify", "Check the relation families on alpha_n, beta_n");
  sch->add_option("--n", o.n)->required();
  sch->add_option("--max-ij", o.max_ij)->required();
  sch->callback([&] {
    handler = [&] {
      if (o.max_ij < 1) {
        throw DomainError("--max-ij must be positive");
      }
      return io::to_json(schein_check(o.n, o.max_ij));
    };
  });

  auto* num = app.add_subcommand("numerical", "Numerical semigroup invariants");
  num->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"frobenius", "mingens", "presentation"}));
  num->add_option("gens", o.file)->required();
  num->callback([&] {
    handler = [&] {
      auto const s = io::numerical_from_json(io::read_json_file(o.file));
      Json j;
      if (o.action == "frobenius") {
        j["gcd"] = s.gcd();
        if (auto f = numerical::frobenius(s)) {
          j["frobenius"] = *f;
        } else {
          j["frobenius"] = nullptr;
        }
        j["gaps"] = numerical::gaps(s);
      } else if (o.action == "mingens") {
        j["minimal_generators"] = numerical::minimal_generators(s);
      } else {
        j = io::to_json(numerical::minimal_presentation(s));
      }
      return j;
    };
  });

  auto* pres = app.add_subcommand("presentation", "Build or verify a presentation of <A>");
  pres->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"build", "verify"}));
  pres->add_option("gens", o.file)->required();
  pres->add_option("--length", o.length, "Completeness word length");
  pres->add_option("--search-length", o.search_length);
  pres->add_option("--search-steps", o.search_steps);
  pres->callback([&] {
    handler = [&] {
      Json const doc = io::read_json_file(o.file);
      GeneratorSet const a = io::generators_from_json(doc);
      if (o.action == "build") {
        BuiltPresentation const b = build_presentation(a);
        Json j = io::to_json(b.presentation);
        j["values"] = io::to_json(b.values);
        return j;
      }
      // A file may carry its own presentation and symbol values; otherwise
      // the built one is checked.
      std::optional<BuiltPresentation> b;
      if (doc.contains("alphabet")) {
        std::vector<Element> values;
        if (!doc.contains("values") || !doc["values"].is_array()) {
          throw DomainError("a presentation needs \"values\"");
        }
        for (auto const& v : doc["values"]) {
          values.push_back(io::element_from_json(v));
        }
        b.emplace(BuiltPresentation{io::presentation_from_json(doc), values});
      } else {
        b.emplace(build_presentation(a));
      }
      VerifyOptions opts;
      opts.max_word_length = o.length;
      opts.search_max_length = o.search_length;
      opts.search_max_steps = o.search_steps;
      auto const report = verify_presentation(a, b->presentation, b->values, opts);
      Json j = io::to_json(b->presentation);
      j["values"] = io::to_json(b->values);
      j["report"] = io::to_json(b->presentation, report);
      return j;
    };
  });

  auto* munn = app.add_subcommand("munn-dot", "Munn tree of an element as DOT");
  munn->add_option("e", o.e1)->required();
  munn->callback([&] {
    MunnDiagram const d = render_munn(io::parse_element(o.e1));
    raw = o.text ? d.ascii + "\n" : d.dot;
    is_raw = true;
  });

  auto* lat = app.add_subcommand("lattice-dot", "Idempotent grid as DOT");
  lat->add_option("--amax", o.amax)->required();
  lat->add_option("--bmax", o.bmax)->required();
  lat->add_option("--mark", o.mark, "Generator file whose idempotents are marked");
  lat->callback([&] {
    if (o.amax < 0 || o.bmax < 0) {
      throw DomainError("--amax and --bmax must be non-negative");
    }
    std::set<Element> marked;
    if (!o.mark.empty() && o.amax + o.bmax > 0) {
      for (auto const& e : enumerate_closure(load_generators(o.mark),
                                             o.amax + o.bmax)) {
        if (is_idempotent(e) && e.left() <= o.amax && e.right() <= o.bmax) {
          marked.insert(e);
        }
      }
    }
    raw = render_lattice_dot(o.amax, o.bmax, marked);
    is_raw = true;
  });

  std::vector<char const*> argv;
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }
    if (is_raw) {
      out << raw;
      return 0;
    }
    Json const result = handler();
    if (o.text) {
      write_text(out, result);
    } else {
      out << result.dump() << '\n';
    }
    return 0;
  } catch (DomainError const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (RangeError const& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fi1::cli
