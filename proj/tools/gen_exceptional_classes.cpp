// Enumerates the exceptional mutation classes and writes them out as a C++ source file.
#include <fstream>
#include <iostream>

#include "quivermut/mutation_class.hpp"
#include "quivermut/type_registry.hpp"

using namespace quivermut;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_exceptional_classes OUT.cpp\n";
    return 2;
  }
  const char* types[] = {"E,6",     "E,7",     "E,8",    "E,6,1",  "E,7,1",   "E,8,1",  "E,6,1:1",
                         "E,7,1:1", "E,8,1:1", "F,4",    "F,4,1",  "F,4,-1",  "G,2",    "G,2,1",
                         "G,2,-1",  "V,4,2",   "W,4,2",  "W,4,-2", "X,6,2",   "X,7,2",  "Y,6,2",
                         "Z,6,2",   "Z,6,-2"};
  std::ofstream out(argv[1]);
  out << "// generated by gen_exceptional_classes\n#include \"exceptional_catalog.hpp\"\n\n"
      << "namespace quivermut::detail {\n\nconst CatalogEntry kExceptionalCatalog[] = {\n";
  std::size_t count = 0;
  for (const char* d : types) {
    TypePtr t = parse_type(d);
    auto cls = mutation_class(t->standard_quiver());
    ClassSize expected = class_size(t);
    if (expected.kind != ClassSize::Kind::exact || expected.value != cls.size()) {
      std::cerr << t->repr() << ": enumerated " << cls.size() << ", expected " << expected.to_string() << "\n";
      return 1;
    }
    out << "  {\"" << t->designation() << "\", " << cls.size() << ", R\"QMT(";
    for (const auto& item : cls) out << canonical_key(item.value) << "\n";
    out << ")QMT\"},\n";
    ++count;
  }
  out << "};\n\nconst std::size_t kExceptionalCatalogSize = " << count << ";\n\n}  // namespace quivermut::detail\n";
  return out ? 0 : 1;
}
