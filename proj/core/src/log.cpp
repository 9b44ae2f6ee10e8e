#include "twistfuse/log.hpp"

#include <iostream>
#include <mutex>

namespace twistfuse {
namespace {

std::mutex sink_mutex;

WarningSink& current_sink() {
  static WarningSink sink = [](std::string_view message) {
    std::cerr << "twistfuse: warning: " << message << '\n';
  };
  return sink;
}

}  // namespace

WarningSink set_warning_sink(WarningSink sink) {
  std::lock_guard lock(sink_mutex);
  std::swap(current_sink(), sink);
  return sink;
}

void warn(std::string_view message) {
  std::lock_guard lock(sink_mutex);
  if (auto& sink = current_sink()) sink(message);
}

}  // namespace twistfuse
