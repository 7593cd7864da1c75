#ifndef HGC_IO_HPP
#define HGC_IO_HPP

#include <string>
#include <vector>

#include "hgc/diagram.hpp"
#include "hgc/words.hpp"

namespace hgc {

// Orientation convention tag carried in every file and output document. A
// flipped convention would silently negate the triple-cup values, so the tag
// is explicit.
inline constexpr const char* kOrientationTag = "rot-ccw-v1";
inline constexpr const char* kDiagramMagic = "hgc-diagram";
inline constexpr const char* kWordMagic = "hgc-words";
inline constexpr const char* kFormatVersion = "v1";

struct DiagramSpec {
  int genus = 0;
  int alpha_curves = 0, beta_curves = 0;
  std::vector<Crossing> crossings;
};

struct WordSpec {
  int genus = 0;
  std::vector<FreeWord> beta_words;
};

// Deterministic built-in examples. Names: s3:g, s1s2, t3, sgxs1:g, lens:p:q.
DiagramSpec example_diagram(const std::string& name);
WordSpec example_words(const std::string& name);
std::vector<std::string> example_names();

std::string render_diagram_file(const DiagramSpec& spec);
std::string render_word_file(const WordSpec& spec);
DiagramSpec parse_diagram_file(const std::string& text);
WordSpec parse_word_file(const std::string& text);
bool looks_like_word_file(const std::string& text);

HeegaardDiagram build_diagram(const DiagramSpec& spec);

}  // namespace hgc

#endif
