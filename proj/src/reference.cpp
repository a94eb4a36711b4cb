#include "bcipher/reference.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace bcipher {

Word32 step_reference(Word32 x, Mu8 mu) {
    using boost::multiprecision::cpp_int;

    const cpp_int modulus = cpp_int(4294967296);   // 2^32
    const cpp_int scale = cpp_int(256);            // mu denominator

    const cpp_int doubled = (cpp_int(2) * x) % modulus;
    const cpp_int product = doubled * cpp_int(mu.value);
    const cpp_int truncated = product / scale;     // floor for non-negatives
    const cpp_int offset = modulus * (scale - cpp_int(mu.value)) / (scale * 2);

    const cpp_int result = truncated + offset;
    if (result >= modulus) {
        throw std::logic_error("step_reference: result exceeds 32 bits");
    }
    return result.convert_to<Word32>();
}

} // namespace bcipher
