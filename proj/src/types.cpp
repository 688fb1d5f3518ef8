#include "ioi/types.hpp"

namespace ioi {

const char* to_string(IoIEventKind kind) {
  switch (kind) {
    case IoIEventKind::AudioVision: return "AudioVision";
    case IoIEventKind::VisionOnly: return "VisionOnly";
  }
  return "?";
}

}  // namespace ioi
