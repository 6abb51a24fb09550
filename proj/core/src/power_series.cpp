#include <qseries/power_series.hpp>

namespace qseries {

template class TruncatedSeries<ExactRational>;
template class TruncatedSeries<double>;

}  // namespace qseries
