#include "fqg/io.hpp"
#include "fqg/models.hpp"
#include "kp8_data.hpp"

namespace fqg {

QGPtr kac_paljutkin() { return parse_quantum_group(kKp8Json); }

}  // namespace fqg
