#pragma once

#include <functional>
#include <string_view>

namespace twistfuse {

using WarningSink = std::function<void(std::string_view)>;

// Default sink writes "twistfuse: warning: ..." to stderr. Passing an empty
// function silences warnings. Returns the previous sink.
WarningSink set_warning_sink(WarningSink sink);

void warn(std::string_view message);

}  // namespace twistfuse
