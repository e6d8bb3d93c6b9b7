package com.example.signup;

import javax.validation.Valid;
import org.springframework.web.bind.annotation.PostMapping;
import org.springframework.web.bind.annotation.RequestBody;
import org.springframework.web.bind.annotation.RestController;

@RestController
public class RegistrationController {

    @PostMapping("/registrations")
    public Registration register(@RequestBody @Valid Registration registration) {
        return registration;
    }
}
