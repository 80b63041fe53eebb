# Management package for catalog app 