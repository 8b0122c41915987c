#include "coxword/registry.hpp"

#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "coxword/error.hpp"
#include "coxword/generic_group.hpp"
#include "coxword/permutation_group.hpp"

namespace coxword {

  namespace {

    constexpr std::size_t kFullLength = 100'000;

    CoxeterSystem named_matrix(std::string const& name) {
      if (name == "BC3") {
        return make_system({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}, {0, 1, 2}, name);
      }
      if (name == "D4") {
        return make_system({{1, 3, 2, 2}, {3, 1, 3, 3}, {2, 3, 1, 2}, {2, 3, 2, 1}},
                           {0, 1, 2, 3}, name);
      }
      if (name == "H3") {
        return make_system({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}, {0, 1, 2}, name);
      }
      throw UnknownSystem(name);
    }

    void finish(SystemHandle& h, LoadOptions const& options) {
      if (h.finite) {
        h.table     = std::make_shared<CayleyTable const>(h.group, kFullLength);
        h.rho_bound = std::numeric_limits<std::size_t>::max();
      } else {
        h.table = std::make_shared<CayleyTable const>(h.group, 2 * options.rho_bound + 4);
        h.rho_bound = options.rho_bound;
      }
      h.engine = std::make_shared<InvolutionEngine const>(h.table);
    }

    bool group_is_finite(Group const& g) {
      try {
        enumerate_group(g, kFullLength, 200'000);
        return true;
      } catch (BoundExceeded const&) {
        return false;
      }
    }

  }  // namespace

  std::vector<ElementId> SystemHandle::involutions() const {
    return finite ? engine->all_twisted_involutions() : engine->twisted_involutions(rho_bound);
  }

  SystemHandle load_system(std::string const& spec, LoadOptions const& options) {
    SystemHandle h;
    h.name = spec;
    std::smatch m;
    static std::regex const type_a_re(R"((2|aff)?A(\d+))");
    static std::regex const dihedral_re(R"((2)?I2\((\d+)\))");
    bool const generic = options.backend == BackendChoice::Generic;
    if (std::regex_match(spec, m, type_a_re)) {
      std::size_t const k        = std::stoul(m[2].str());
      bool const        affine   = m[1] == "aff";
      bool const        reversal = m[1] == "2";
      if (k < 1 || k > 12 || (affine && k < 2)) {
        throw UnknownSystem(spec + ": rank out of range");
      }
      std::size_t const n = k + 1;
      if (generic) {
        h.group = std::make_shared<GenericGroup const>(
            symmetric_group_system(n, affine, reversal));
      } else {
        h.group = std::make_shared<PermutationGroup const>(n, affine, reversal);
      }
      h.finite = !affine;
      if (!reversal || k == 1) {
        h.type_a = TypeA(n, affine);
      }
      h.classified_simply_braided = reversal && k % 2 == 1 && k > 1 ? false : true;
    } else if (std::regex_match(spec, m, dihedral_re)) {
      int const  n       = std::stoi(m[2].str());
      bool const twisted = m[1] == "2";
      if (n < 2 || n > 1000) {
        throw UnknownSystem(spec + ": order out of range");
      }
      h.group = std::make_shared<GenericGroup const>(make_system(
          {{1, n}, {n, 1}}, twisted ? std::vector<Gen>{1, 0} : std::vector<Gen>{0, 1}, spec));
      if (twisted || n >= 3) {
        h.classified_simply_braided = true;
      }
    } else if (spec == "BC3" || spec == "D4" || spec == "H3") {
      h.group                     = std::make_shared<GenericGroup const>(named_matrix(spec));
      h.classified_simply_braided = false;
    } else {
      std::ifstream in(spec);
      if (!in) {
        throw UnknownSystem(spec);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      h.group  = std::make_shared<GenericGroup const>(system_from_json(buf.str()));
      h.finite = group_is_finite(*h.group);
    }
    finish(h, options);
    return h;
  }

  std::vector<std::string> registry_names() {
    return {"A1",    "A2",    "A3",    "A4",     "2A2",    "2A3",    "2A4",   "affA2",
            "affA3", "BC3",   "D4",    "H3",     "I2(2)",  "I2(3)",  "I2(4)", "I2(5)",
            "I2(6)", "I2(7)", "2I2(2)", "2I2(3)", "2I2(4)", "2I2(5)", "2I2(6)", "2I2(7)"};
  }

  CoxeterSystem system_from_json(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("bad system file: ") + e.what());
    }
    try {
      auto const rank   = j.at("rank").get<std::size_t>();
      auto const matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
      std::vector<Gen> star;
      if (j.contains("star")) {
        for (int v : j.at("star").get<std::vector<int>>()) {
          star.push_back(static_cast<Gen>(v));
        }
      } else {
        for (std::size_t i = 0; i < rank; ++i) {
          star.push_back(static_cast<Gen>(i));
        }
      }
      if (matrix.size() != rank || star.size() != rank) {
        throw InvalidMatrix("rank does not match the matrix and star sizes");
      }
      return make_system(matrix, star, j.value("name", std::string("custom")));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("bad system file: ") + e.what());
    }
  }

  std::string system_to_json(CoxeterSystem const& system) {
    nlohmann::json j;
    j["rank"] = system.rank();
    std::vector<std::vector<int>> matrix;
    for (auto const& row : system.matrix()) {
      std::vector<int> r;
      for (Order o : row) {
        r.push_back(o.to_file());
      }
      matrix.push_back(std::move(r));
    }
    j["matrix"] = matrix;
    std::vector<int> star(system.star_map().begin(), system.star_map().end());
    j["star"] = star;
    if (!system.name().empty()) {
      j["name"] = system.name();
    }
    return j.dump();
  }

  ElementId parse_element(SystemHandle const& h, std::string const& text) {
    CayleyTable const& T = *h.table;
    if (text == "e" || text == "id" || text == "()") {
      return CayleyTable::identity();
    }
    std::optional<GroupElement> elem;
    if (!text.empty() && (text.front() == '[' || (text.front() == '(' && text.size() > 2))) {
      auto const* pg = dynamic_cast<PermutationGroup const*>(h.group.get());
      if (pg == nullptr) {
        throw ParseError("window and cycle notation need a symmetric group");
      }
      Window const w = text.front() == '[' ? Window::parse(text)
                                           : Window::from_cycles(text, pg->degree());
      elem = pg->element(w);
    }
    if (elem) {
      auto id = T.find(*elem);
      if (!id) {
        throw BoundExceeded("element " + text + " lies outside the enumerated ball");
      }
      return *id;
    }
    std::string letters;
    for (char c : text) {
      if (c != 's') {
        letters += c;
      }
    }
    PrimedWord const word = parse_word(letters, T.rank());
    Word const       plain = strip_primes(word);
    ElementId const  id    = T.from_word(plain);
    if (id == kNoElement) {
      throw BoundExceeded("element " + text + " lies outside the enumerated ball");
    }
    return id;
  }

}  // namespace coxword
