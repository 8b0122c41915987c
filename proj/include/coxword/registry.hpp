#ifndef COXWORD_REGISTRY_HPP_
#define COXWORD_REGISTRY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxword/cayley_table.hpp"
#include "coxword/involution.hpp"
#include "coxword/type_a.hpp"

namespace coxword {

  enum class BackendChoice { Auto, Generic, Permutation };

  struct LoadOptions {
    BackendChoice backend   = BackendChoice::Auto;
    std::size_t   rho_bound = 6;  // used for infinite groups
  };

  // A loaded system with its Cayley table and involution engine.
  struct SystemHandle {
    std::string                             name;
    std::shared_ptr<Group const>            group;
    std::shared_ptr<CayleyTable const>      table;
    std::shared_ptr<InvolutionEngine const> engine;
    bool                                    finite = true;
    std::size_t                             rho_bound;  // max value for finite groups
    std::optional<TypeA>                    type_a;     // symmetric groups with * = id
    // Expected answer of the irreducible finite/affine classification, when
    // it applies.
    std::optional<bool> classified_simply_braided;

    CoxeterSystem const& system() const {
      return group->system();
    }
    // All twisted involutions within the bound, by id.
    std::vector<ElementId> involutions() const;
  };

  // Builds "A{k}", "2A{k}", "affA{k}", "BC3", "D4", "H3", "I2(n)", "2I2(n)",
  // or reads a JSON file {"rank", "matrix" (0 = infinity), "star"}.
  SystemHandle load_system(std::string const& name_or_path, LoadOptions const& options = {});

  // Example names for listing.
  std::vector<std::string> registry_names();

  CoxeterSystem system_from_json(std::string const& text);
  std::string   system_to_json(CoxeterSystem const& system);

  // Parses an element given as a word ("2123", "s1", "1,2"), a window
  // ("[2,1,3,4]"), cycles ("(1,4)(2,3)") or "e"/"()" for the identity.
  ElementId parse_element(SystemHandle const& h, std::string const& text);

}  // namespace coxword

#endif  // COXWORD_REGISTRY_HPP_
