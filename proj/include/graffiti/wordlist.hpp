#pragma once

#include <string>
#include <vector>

namespace graffiti {

// ~10k distinct lowercase words used for page titles and usernames.
const std::vector<std::string>& wordlist();

} // namespace graffiti
