#include "singcbf/atomic_file.hpp"

#include <fstream>

#include "singcbf/errors.hpp"

namespace singcbf {

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.parent_path();
  if (!dir.empty()) fs::create_directories(dir);

  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open for writing: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp);
      throw Error("short write to: " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

}  // namespace singcbf
