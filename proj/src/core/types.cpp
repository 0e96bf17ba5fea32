#include "radardet/core/types.hpp"

#include "radardet/core/error.hpp"

namespace radardet {

const char* error_category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kConfig: return "config_error";
    case ErrorCategory::kFormat: return "format_error";
    case ErrorCategory::kValidation: return "validation_error";
    case ErrorCategory::kArgument: return "argument_error";
    case ErrorCategory::kContract: return "contract_error";
    case ErrorCategory::kIo: return "io_error";
  }
  return "error";
}

const char* class_name(ObjectClass c) {
  switch (c) {
    case ObjectClass::kCar: return "car";
    case ObjectClass::kPedestrian: return "pedestrian";
    case ObjectClass::kCyclist: return "cyclist";
  }
  return "unknown";
}

ObjectClass class_from_name(const std::string& name) {
  if (name == "car") return ObjectClass::kCar;
  if (name == "pedestrian") return ObjectClass::kPedestrian;
  if (name == "cyclist") return ObjectClass::kCyclist;
  throw ValidationError("unknown class name '" + name + "'");
}

double wrap_angle(double a) {
  const double two_pi = 2.0 * M_PI;
  a = std::fmod(a, two_pi);
  if (a <= -M_PI) a += two_pi;
  if (a > M_PI) a -= two_pi;
  return a;
}

}  // namespace radardet
