#ifndef CFDB_TESTS_SUPPORT_HPP
#define CFDB_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <string>

inline std::string read_data_file() {
  std::ifstream f(CFDB_DATA_PATH);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

#endif
