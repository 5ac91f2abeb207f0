#ifndef ARCFAN_IOUTIL_HPP
#define ARCFAN_IOUTIL_HPP

#include <string>

namespace arcfan {

/// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace arcfan

#endif
